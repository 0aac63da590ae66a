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
"""Orbits Command Module."""

import click

from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import logger
from springer_lab import orbits
from springer_lab.command import base

LOG = logger.get_logger(__name__)

GROUPS = ("sp", "gl_pairs")


class Orbits(base.Base):
    """
    Orbits Command Class.

    .. program:: springer-lab orbits --group sp --n 2 --q 2

    .. option:: springer-lab orbits --group sp --n 2 --q 2

        Nilpotent Sp_4(F_2) orbits with fingerprint, size and rendered
        bipartition.

    .. program:: springer-lab orbits --group gl_pairs --n 2 --q 4

    .. option:: springer-lab orbits --group gl_pairs --n 2 --q 4

        GL_2(F_4) orbits on nilpotent pairs with their bipartition labels.

    The dimension estimate compares the orbit sizes over F_q and F_(q^2);
    it is null when the second census is out of the configured limits.
    """

    def execute(self):
        """
        Enumerate the orbits and returns a list of JSON records.

        :return: list
        """
        args = self._config.command_args
        group, n, q = args["group"], args["n"], args["q"]
        field = gf2k.field_by_size(q)
        self._config.check_field_degree(field.k)
        if group == "sp":
            return self._sp_records(n, field)
        return self._pair_records(n, field)

    def _limit(self):
        return self._config.limits["max_group_order"]

    def _feasible(self, q, dim):
        degree = (q * q).bit_length() - 1
        if degree > self._config.limits["max_field_degree"]:
            return False
        limit = self._limit()
        return limit is None or (q * q) ** dim <= limit

    def _sp_records(self, n, field):
        ctx = geometry.get_context(2 * n, field)
        census = orbits.sp_nilpotent_census(ctx, self._config.jobs, self._limit())
        records = orbits.orbit_report(
            ctx, census, self._config.rng, self._config.command_args["samples"]
        )
        q = field.order
        if self._feasible(q, geometry.lie_algebra(ctx, "sp_lie").dim):
            big = gf2k.field_by_size(q * q)
            big_ctx = geometry.get_context(2 * n, big)
            big_census = orbits.sp_nilpotent_census(
                big_ctx, self._config.jobs, self._limit()
            )
            other = orbits.orbit_report(big_ctx, big_census, self._config.rng, 0)
            records = orbits.attach_dimensions(records, other, q, q * q)
        else:
            LOG.warning("Census over F_%d is out of limits, no dimensions", q * q)
        return [
            {
                "fingerprint": r.fingerprint.to_json(),
                "key": r.fingerprint.key,
                "size": r.size,
                "dim_estimate": r.dim_estimate,
                "bipartition": None
                if r.bipartition is None
                else [p.to_json() for p in r.bipartition],
                "orbit_constant": r.constant,
                "representative": r.representative.to_json(),
            }
            for r in records
        ]

    def _pair_sizes(self, n, field):
        census = orbits.gl_pair_census(field, n, self._limit())
        out = {}
        for root, size in zip(census.roots, census.sizes):
            x, v = orbits.census_pair(census, root)
            out[orbits.ah_pair_label(x, v)] = (int(size), x, v)
        return out

    def _pair_records(self, n, field):
        q = field.order
        sizes = self._pair_sizes(n, field)
        other = {}
        if self._feasible(q, n * n + n):
            other = self._pair_sizes(n, gf2k.field_by_size(q * q))
        records = []
        for label in sorted(sizes, key=lambda lab: (lab.lambda1, lab.lambda2)):
            size, x, v = sizes[label]
            dim = None
            if label in other:
                dim = orbits.estimate_dimension(size, q, other[label][0], q * q)
            records.append(
                {
                    "label": label.to_json(),
                    "size": size,
                    "dim_estimate": dim,
                    "representative": {"x": x.to_json(), "v": list(v)},
                }
            )
        return records


@base.click_command_ex("orbits")
@click.pass_context
@click.option(
    "--group",
    "-g",
    type=click.Choice(GROUPS),
    default="sp",
    help="Nilpotent elements of sp_2n, or nilpotent pairs under GL_n. (sp)",
)
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Rank n.")
@click.option("--q", "q", type=int, default=2, help="Field size, a power of 2. (2)")
@click.option(
    "--samples",
    type=click.IntRange(min=0),
    default=8,
    help="Members per orbit checked for a constant fingerprint. (8)",
)
@click.option(
    "--format",
    "-f",
    type=click.Choice(["json", "yaml", "simple"]),
    default="json",
    help="Change output format. (json)",
)
def orbits_command(ctx, group, n, q, samples, format):  # pragma: no cover
    """Enumerate nilpotent orbits with their invariants."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {
        "subcommand": subcommand,
        "group": group,
        "n": n,
        "q": q,
        "samples": samples,
    }

    c = base.get_config(args, command_args)
    records = base.execute_subcommand(c, subcommand)
    if format == "simple":
        headers = ["key", "size", "dim_estimate", "bipartition"]
        if group == "gl_pairs":
            headers = ["label", "size", "dim_estimate"]
        base.print_records(records, format, headers=headers)
    else:
        base.print_records(records, format)

