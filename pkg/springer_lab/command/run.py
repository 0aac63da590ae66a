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
"""Run Command Module."""

import click

from springer_lab import api
from springer_lab import logger
from springer_lab import util
from springer_lab.command import base

LOG = logger.get_logger(__name__)


class Run(base.Base):
    """
    Run Command Class.

    .. program:: springer-lab run combinatorics

    .. option:: springer-lab run combinatorics

        Run one verification suite.

    .. program:: springer-lab run all

    .. option:: springer-lab run all

        Run every suite under one time budget.

    .. program:: springer-lab --seed 7 --budget-seconds 60 run all

    .. option:: springer-lab --seed 7 --budget-seconds 60 run all

        Reseed the random generator and stop after a minute; checks left
        when the budget runs out are reported as skipped.

    .. program:: springer-lab run --timings fibers

    .. option:: springer-lab run --timings fibers

        Record the runtime of every check. Without it reports are
        byte-identical across runs.
    """

    def execute(self):
        """
        Execute the suite named in the command arguments and returns a report.

        :return: :class:`springer_lab.suite.base.SuiteReport`
        """
        self.print_info()
        name = self._config.command_args["suite"]
        report = api.run_suite(name, self._config)
        summary = report.to_json()["summary"]
        msg = "Suite '{}': {} passed, {} failed, {} skipped".format(
            name, summary["pass"], summary["fail"], summary["skipped"]
        )
        if report.exit_code == util.EXIT_PASS:
            LOG.success(msg)
        else:
            LOG.warning(msg)
        return report


@base.click_command_ex()
@click.pass_context
@click.argument("suite", nargs=1)
@click.option(
    "--timings",
    is_flag=True,
    default=False,
    help="Record check runtimes in the report. Default is disabled.",
)
@click.option(
    "--format",
    "-f",
    type=click.Choice(["json", "yaml"]),
    default="json",
    help="Change output format. (json)",
)
def run(ctx, suite, timings, format):  # pragma: no cover
    """Run a verification suite, or all of them."""
    args = dict(ctx.obj.get("args"))
    args["timings"] = True if timings else None
    subcommand = base._get_subcommand(__name__)
    command_args = {"subcommand": subcommand, "suite": suite}

    c = base.get_config(args, command_args)
    report = base.execute_subcommand(c, subcommand)
    if format == "json":
        base.print_json(report.to_json())
    else:
        base.print_yaml(report.to_json())
    util.sysexit(report.exit_code)
