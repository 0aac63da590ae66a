#  Copyright (c) 2020 springer-lab contributors
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
"""Fiber Command Module."""

import click

from springer_lab import combinatorics
from springer_lab import fibers
from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import logger
from springer_lab import orbits
from springer_lab.command import base
from springer_lab.linalg import Mat
from springer_lab.model import schema

LOG = logger.get_logger(__name__)


class Fiber(base.Base):
    """
    Fiber Command Class.

    Counts the rational points of a Springer fiber over a 0/1 point at
    several field sizes and fits a polynomial in ``q`` to the counts. The
    point comes from a document ``{"N": .., "x": [[..]], "v": [..],
    "m1": .., "variant": .., "q_values": [..], "degree": ..}`` or is sampled
    from a stratum of rank 2 given in its compact form.

    .. program:: springer-lab fiber point.json

    .. option:: springer-lab fiber point.json

        Count the fiber over the point stored in a file.

    .. program:: springer-lab fiber --stratum '1|1|-'

    .. option:: springer-lab fiber --stratum '1|1|-'

        Sample a generic point of the stratum and count its fiber.

    .. program:: springer-lab fiber --stratum '1|1|-' --variant restricted

    .. option:: springer-lab fiber --stratum '1|1|-' --variant restricted

        Count the fiber whose flags hold ``v`` in their ``m1``-th subspace.
    """

    def execute(self):
        """
        Execute the counts and returns a JSON serializable record.

        :return: dict
        """
        args = self._config.command_args
        if args.get("stratum"):
            doc, sample = self._sample_point(args["stratum"])
        elif args.get("document") is not None:
            doc, sample = self._read_point(args["document"]), None
        else:
            raise click.UsageError("Give an INPUT document or --stratum")

        variant = args.get("variant") or doc.get("variant", "full")
        q_values = (
            args.get("q_values")
            or doc.get("q_values")
            or self._config.fibers["q_values"]
        )
        for q in q_values:
            self._config.check_field_degree(q.bit_length() - 1)
        degree = args.get("degree")
        if degree is None:
            degree = doc.get("degree")

        field = gf2k.get_field(1)
        ctx = geometry.get_context(doc["N"], field)
        x, v = Mat(field, doc["x"]), tuple(doc["v"])
        m1 = doc.get("m1", 0)
        series = fibers.count_series(
            (x, v), m1, ctx, variant, q_values, self._config.limits["max_flag_count"]
        )
        if degree is None:
            fit, verified = fibers.fit_lowest_degree(series)
        else:
            fit = fibers.fit_point_polynomial(series, degree)
            verified = fit.fitted and len(series) > degree + 1
        LOG.debug("Fiber counts %s fit %s", series.to_json(), fit)

        return {
            "N": doc["N"],
            "x": x.to_json(),
            "v": list(v),
            "m1": m1,
            "variant": variant,
            "stratum": sample,
            "series": series.to_json(),
            "fit": fit.to_json(),
            "verified": verified,
        }

    def _read_point(self, doc):
        base.check_input(schema.validate_fiber(doc))
        return doc

    def _sample_point(self, slug):
        mp = combinatorics.Multipartition.from_slug(slug)
        if mp.r != 3:
            raise base.InvalidInputError(
                "A stratum is labelled by three partitions",
                detail={"stratum": slug},
            )
        sample = fibers.stratum_representative(
            mp.components,
            self._config.rng,
            self._config.fibers["retry_cap"],
            orbits.rendering_table(),
        )
        if not sample.accepted:
            LOG.warning("Using a non-generic point of %s", mp.slug)
        doc = {"N": 2 * mp.n, "x": sample.x.data, "v": sample.v, "m1": mp.sizes[0]}
        info = {
            "label": mp.slug,
            "attempts": sample.attempts,
            "accepted": sample.accepted,
            "stabilizing_count": sample.stabilizing_count,
        }
        return doc, info


@base.click_command_ex()
@click.pass_context
@click.argument("input", required=False)
@click.option("--stratum", "-s", help="Sample a point of a stratum, e.g. '1|1|-'.")
@click.option(
    "--variant",
    type=click.Choice(fibers.VARIANTS),
    help="Fiber variant. Default: full, or the document's.",
)
@click.option(
    "--q",
    "q_values",
    type=click.IntRange(2),
    multiple=True,
    help="Field size, repeat for a series. Default: the configured sizes.",
)
@click.option("--degree", type=click.IntRange(0), help="Degree to fit.")
def fiber(ctx, input, stratum, variant, q_values, degree):  # pragma: no cover
    """Count a Springer fiber over growing fields and fit a polynomial."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {
        "subcommand": subcommand,
        "document": None if input is None else base.read_input(input),
        "stratum": stratum,
        "variant": variant,
        "q_values": sorted(set(q_values)),
        "degree": degree,
    }

    c = base.get_config(args, command_args)
    base.print_json(base.execute_subcommand(c, subcommand))
