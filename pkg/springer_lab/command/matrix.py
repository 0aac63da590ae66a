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
"""Matrix Command Module."""

import click

from springer_lab import api
from springer_lab import logger
from springer_lab.command import base

LOG = logger.get_logger(__name__)


class Matrix(base.Base):
    """
    Matrix Command Class.

    .. program:: springer-lab matrix fibers

    .. option:: springer-lab matrix fibers

        Show the checks of one suite without running them.

    .. program:: springer-lab matrix all

    .. option:: springer-lab matrix all

        Show the checks of every suite.
    """

    def execute(self):
        """
        Print the check matrix of the selected suites and returns None.

        :return: None
        """
        name = self._config.command_args["suite"]
        if name == api.ALL_SUITES:
            selected = api.suites()
        else:
            selected = [api.get_suite(name)]
        for suite in selected:
            suite.print_matrix()


@base.click_command_ex()
@click.pass_context
# NOTE: Cannot introspect the suites for `click.Choice`, plugins load lazily.
@click.argument("suite", nargs=1, type=click.UNPROCESSED)
def matrix(ctx, suite):  # pragma: no cover
    """List the checks of a suite."""
    args = ctx.obj.get("args")
    subcommand = base._get_subcommand(__name__)
    command_args = {"subcommand": subcommand, "suite": suite}

    c = base.get_config(args, command_args)
    base.execute_subcommand(c, subcommand)
