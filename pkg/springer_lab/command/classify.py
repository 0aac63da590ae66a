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
"""Classify Command Module."""

import click

from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import orbits
from springer_lab.command import base
from springer_lab.model import schema

LOG = logger.get_logger(__name__)


class Classify(base.Base):
    """
    Classify Command Class.

    Reads ``{"context": {"N": .., "field": ..}, "x": matrix, "v": [..],
    "M": matrix}`` where the rows of ``M`` span an x-stable Lagrangian
    containing ``v``, and prints the stratum label of ``(x, v)``.

    .. program:: springer-lab classify point.json

    .. option:: springer-lab classify point.json

        Classify the point stored in a file.

    .. program:: springer-lab classify -

    .. option:: springer-lab classify -

        Read the point from stdin.
    """

    def execute(self):
        """
        Validate the input document and returns its :class:`StratumLabel`.

        :return: StratumLabel
        """
        doc = self._config.command_args["document"]
        base.check_input(schema.validate_classify(doc))
        ctx = geometry.FormContext.from_json(doc["context"])
        self._config.check_field_degree(ctx.field.k)
        for key in ("x", "M"):
            if doc[key]["field"] != ctx.field.name:
                raise gf2k.FieldMismatchError(
                    "{} is over {}, the context over {}".format(
                        key, doc[key]["field"], ctx.field.name
                    )
                )
        x = linalg.Mat.from_json(doc["x"], ctx.field)
        M_rows = linalg.Mat.from_json(doc["M"], ctx.field)
        v = tuple(doc["v"])
        for entry in v:
            if entry >= ctx.field.order:
                raise base.InvalidInputError(
                    "v has an entry outside {}".format(ctx.field.name),
                    detail={"v": list(v)},
                )
        M = linalg.Subspace.span(ctx.field, ctx.N, M_rows.data)
        label = orbits.stratum_label(x, v, M, ctx)
        LOG.debug("Classified as %r", label)
        return label


@base.click_command_ex()
@click.pass_context
@click.argument("input", default="-")
def classify(ctx, input):  # pragma: no cover
    """Label a point of the nilpotent cone through a Lagrangian."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {"subcommand": subcommand, "document": base.read_input(input)}

    c = base.get_config(args, command_args)
    label = base.execute_subcommand(c, subcommand)
    base.print_json(label.to_json())
