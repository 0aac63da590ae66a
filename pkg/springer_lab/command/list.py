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
"""List Command Module."""

import click

from springer_lab import api
from springer_lab import logger
from springer_lab import util
from springer_lab.command import base

LOG = logger.get_logger(__name__)

HEADERS = ("name", "checks", "description")


class List(base.Base):
    """
    List command shows the installed verification suites.

    .. program:: springer-lab list

    .. option:: springer-lab list

        Show every suite with its check count.

    .. program:: springer-lab list --format plain

    .. option:: springer-lab list  --format plain

        Machine readable plain text output.

    .. program:: springer-lab list --format yaml

    .. option:: springer-lab list  --format yaml

        Machine readable yaml output.
    """

    def execute(self):
        """
        Execute the actions necessary to perform a `springer-lab list` and \
        returns a list of rows.

        :return: list
        """
        return [
            (suite.name, len(suite.checks()), suite.description)
            for suite in api.suites()
        ]


@base.click_command_ex()
@click.pass_context
@click.option(
    "--format",
    "-f",
    type=click.Choice(["simple", "plain", "yaml"]),
    default="simple",
    help="Change output format. (simple)",
)
def list(ctx, format):  # pragma: no cover
    """List the verification suites."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {"subcommand": subcommand, "format": format}

    c = base.get_config(args, command_args)
    rows = base.execute_subcommand(c, subcommand)

    headers = [util.title(name) for name in HEADERS]
    if format == "simple" or format == "plain":
        table_format = "simple"
        if format == "plain":
            headers = []
            table_format = format
        base.print_tabulate_data(headers, rows, table_format)
    else:
        base.print_yaml([dict(zip(HEADERS, row)) for row in rows])
