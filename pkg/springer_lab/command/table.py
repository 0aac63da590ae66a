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
"""Table Command Module."""

import click

from springer_lab import combinatorics
from springer_lab import logger
from springer_lab import orbits
from springer_lab.command import base

LOG = logger.get_logger(__name__)

KINDS = ("springer", "wnat", "compositions")


def _wnat_record(n, m):
    data = combinatorics.w_nat_data(n, m)
    labels = combinatorics.irreducibles("W_nat", m=m)
    return {
        "m": m.to_json(),
        "order": data.order,
        "stabilizer_count": data.stabilizer_count,
        "steinberg_count": combinatorics.steinberg_components(n, m),
        "irreducibles": len(labels),
        "sum_of_squares": combinatorics.sum_of_squares(labels),
    }


def _composition_record(m):
    record = {"m": m.to_json(), "p1": m.p1, "p2": m.p2, "open": not m.m3}
    for kind in ("x_tilde_m", "x_m", "x_tilde_m_nil"):
        record[kind] = combinatorics.dim_formulas(kind, m=m)
    record["sx_m_nil"] = (
        combinatorics.dim_formulas("sx_m_nil", m=m) if not m.m3 else None
    )
    return record


class Table(base.Base):
    """
    Table Command Class.

    .. program:: springer-lab table springer -n 2

    .. option:: springer-lab table springer -n 2

        One row per stratum with its Weyl group labels and dimensions.

    .. program:: springer-lab table springer -n 2 --format csv

    .. option:: springer-lab table springer -n 2 --format csv

        The same rows as CSV.

    .. program:: springer-lab table wnat -n 3

    .. option:: springer-lab table wnat -n 3

        Orders and stabilizer counts of W_nat for every open composition.

    .. program:: springer-lab table compositions -n 3

    .. option:: springer-lab table compositions -n 3

        Compositions of n with their partial sums and dimensions.
    """

    def execute(self):
        """
        Build the requested table and returns a list of records.

        :return: list of :class:`SpringerRow` for ``springer``, dicts otherwise
        """
        kind = self._config.command_args["kind"]
        n = self._config.command_args["n"]
        LOG.debug("Building %s table for n=%d", kind, n)
        if kind == "springer":
            oracle = combinatorics.rendering_oracle(orbits.rendering_table())
            return combinatorics.springer_table(n, oracle)
        if kind == "wnat":
            return [
                _wnat_record(n, m)
                for m in combinatorics.compositions(n, open_part=True)
            ]
        return [_composition_record(m) for m in combinatorics.compositions(n)]


@base.click_command_ex()
@click.pass_context
@click.argument("kind", type=click.Choice(KINDS))
@click.option("-n", "n", type=click.IntRange(min=0), required=True, help="Rank n.")
@click.option(
    "--format",
    "-f",
    type=click.Choice(base.FORMATS),
    default="json",
    help="Change output format. (json)",
)
def table(ctx, kind, n, format):  # pragma: no cover
    """Emit Springer correspondence and Weyl group tables."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {"subcommand": subcommand, "kind": kind, "n": n}

    c = base.get_config(args, command_args)
    records = base.execute_subcommand(c, subcommand)
    print_table(kind, records, format)


def print_table(kind, records, format):
    if kind == "springer":
        if format in ("csv", "simple"):
            headers = list(combinatorics.CSV_HEADER)
            rows = [r.csv_row() for r in records]
            if format == "csv":
                base.print_csv(headers, rows)
            else:
                base.print_tabulate_data(headers, rows)
            return
        records = [r.to_json() for r in records]
    base.print_records(records, format)
