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
"""Springer Lab Shell Module."""

import sys

import click
import click_completion
import colorama
import galois
import numpy
import pkg_resources
import sympy
from click_help_colors import _colorize

import springer_lab
from springer_lab import command
from springer_lab import util
from springer_lab.command.base import click_group_ex
from springer_lab.config import SPRINGER_LAB_CONFIG
from springer_lab.config import SPRINGER_LAB_DEBUG
from springer_lab.logger import should_do_markup
from springer_lab.util import lookup_config_file

click_completion.init()
colorama.init(autoreset=True, strip=not should_do_markup())

LOCAL_CONFIG = lookup_config_file(SPRINGER_LAB_CONFIG)


def _version_string():
    try:
        v = pkg_resources.parse_version(springer_lab.__version__)
        color = "bright_yellow" if v.is_prerelease else "green"
    except Exception:
        color = "bright_yellow"
    msg = "springer-lab %s\n" % _colorize(springer_lab.__version__, color)
    msg += _colorize(
        "   galois==%s numpy==%s sympy==%s python==%s.%s"
        % (
            galois.__version__,
            numpy.__version__,
            sympy.__version__,
            sys.version_info[0],
            sys.version_info[1],
        ),
        "bright_black",
    )
    return msg


@click_group_ex()
@click.option(
    "--debug/--no-debug",
    default=SPRINGER_LAB_DEBUG,
    help="Enable or disable debug mode. Default is disabled.",
)
@click.option(
    "--base-config",
    "-c",
    default=LOCAL_CONFIG,
    help=(
        "Path to a base config. If provided springer-lab loads it on top of "
        "the defaults. By default is looking for config in current VCS "
        "repository and if not found it will look on user home. ({})"
    ).format(LOCAL_CONFIG),
)
@click.option("--seed", type=int, help="Seed of the random generator. (0)")
@click.option(
    "--jobs",
    "-j",
    type=click.IntRange(1),
    help="Worker processes for orbit enumeration. (1)",
)
@click.option(
    "--budget-seconds",
    type=click.FloatRange(0),
    help="Wall clock budget of a suite run. Default is unlimited.",
)
@click.option(
    "--unsafe-limits",
    is_flag=True,
    default=False,
    help="Disable the enumeration size guards. Default is disabled.",
)
@click.version_option(
    prog_name="springer-lab",
    version=springer_lab.__version__,
    message=_version_string(),
)
@click.pass_context
def cli(
    ctx, debug, base_config, seed, jobs, budget_seconds, unsafe_limits
):  # pragma: no cover
    """
    Springer Lab checks the Springer correspondence for exotic symmetric spaces.

    Enable autocomplete issue:

      eval "$(_SPRINGER_LAB_COMPLETE=source springer-lab)"
    """
    ctx.obj = {}
    ctx.obj["args"] = {}
    ctx.obj["args"]["debug"] = debug
    ctx.obj["args"]["base_config"] = base_config
    ctx.obj["args"]["seed"] = seed
    ctx.obj["args"]["jobs"] = jobs
    ctx.obj["args"]["budget_seconds"] = budget_seconds
    ctx.obj["args"]["unsafe_limits"] = True if unsafe_limits else None


cli.add_command(command.classify.classify)
cli.add_command(command.fiber.fiber)
cli.add_command(command.list.list)
cli.add_command(command.matrix.matrix)
cli.add_command(command.orbits.orbits_command)
cli.add_command(command.run.run)
cli.add_command(command.table.table)


def main():  # pragma: no cover
    """Run the CLI and map failures onto the documented exit codes."""
    try:
        cli.main(prog_name="springer-lab", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        util.sysexit(util.EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        util.sysexit(e.exit_code)
    except click.Abort:
        click.echo("Aborted!", err=True)
        util.sysexit(util.EXIT_FAIL)
    except util.SpringerLabError as e:
        util.sysexit_with_error(e)
