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
"""Base Command Module."""

import abc
import csv
import io
import sys

import click
import tabulate
from click_help_colors import HelpColorsCommand, HelpColorsGroup

import springer_lab.command
from springer_lab import config
from springer_lab import logger
from springer_lab import util

LOG = logger.get_logger(__name__)

FORMATS = ("json", "csv", "yaml", "simple")


class InvalidInputError(util.SpringerLabError):
    """A JSON input document failed schema validation."""

    code = "invalid_input"


class Base(object, metaclass=abc.ABCMeta):
    """An abstract base class used to define the command interface."""

    def __init__(self, c):
        """
        Initialize code for all :ref:`Command` classes.

        :param c: An instance of a springer_lab config.
        :returns: None
        """
        self._config = c

    @abc.abstractmethod
    def execute(self):  # pragma: no cover
        pass

    def print_info(self):
        msg = "Action: '{}'".format(util.underscore(self.__class__.__name__))
        LOG.info(msg)


def get_config(args, command_args):
    """Build and validate the :class:`springer_lab.config.Config` of a command."""
    return config.Config(args=args, command_args=command_args)


def execute_subcommand(c, subcommand):
    """Execute subcommand."""
    command_module = getattr(springer_lab.command, subcommand)
    command = getattr(command_module, util.camelize(subcommand))

    return command(c).execute()


def read_input(path):
    """
    Read a JSON document from a file, or from stdin for ``-``.

    :param path: A path or ``-``.
    :return: the decoded document
    """
    if path == "-":
        return util.load_json(sys.stdin.read())
    try:
        with util.open_file(path) as stream:
            return util.load_json(stream.read())
    except OSError as e:
        raise util.SpringerLabError(
            "Cannot read input '{}'".format(path), detail=str(e)
        )


def check_input(errors):
    if errors:
        raise InvalidInputError("Input failed schema validation", detail=errors)


def print_json(data):
    sys.stdout.write(util.dump_json(data))


def print_yaml(data):
    sys.stdout.write(util.safe_dump(data))


def print_csv(headers, rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    sys.stdout.write(stream.getvalue())


def print_tabulate_data(headers, data, table_format="simple"):
    """
    Show the tabulate data on the screen and returns None.

    :param headers: A list of column headers.
    :param data:  A list of tabular data to display.
    :returns: None
    """
    print(tabulate.tabulate(data, headers, tablefmt=table_format))


def print_records(records, format, headers=None, row=None):
    """
    Print JSON serializable records in one of :data:`FORMATS`.

    :param records: A list of JSON serializable documents.
    :param format: The output format.
    :param headers: Column headers for ``csv`` and ``simple``.
    :param row: Callable turning a record into a row for ``csv`` and ``simple``.
    :return: None
    """
    if format == "json":
        print_json(records)
    elif format == "yaml":
        print_yaml(records)
    else:
        if headers is None:
            headers = sorted(records[0]) if records else []
        row = row or (lambda r: [r.get(h) for h in headers])
        rows = [row(r) for r in records]
        if format == "csv":
            print_csv(headers, rows)
        else:
            print_tabulate_data([util.title(h) for h in headers], rows)


def _get_subcommand(string):
    return string.split(".")[-1]


def click_group_ex():
    """Return extended version of click.group()."""
    # Color coding used to group command types, documented only here as we may
    # decide to change them later.
    # green : (default) computation on user input
    # blue : inspection of the installed suites
    # yellow : verification runs
    return click.group(
        cls=HelpColorsGroup,
        help_headers_color="yellow",
        help_options_color="green",
        help_options_custom_colors={
            "list": "blue",
            "matrix": "blue",
            "run": "bright_yellow",
        },
    )


def click_command_ex(name=None):
    """Return extended version of click.command()."""
    return click.command(
        name,
        cls=HelpColorsCommand, help_headers_color="yellow", help_options_color="green"
    )
