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

import copy

import pytest

from springer_lab import api
from springer_lab import config
from springer_lab import gf2k
from springer_lab import util
from springer_lab.suite import base


@pytest.helpers.register
def write_config_file(filename, data):
    with util.open_file(filename, "w") as stream:
        stream.write(util.safe_dump(data))


@pytest.fixture
def _base_args():
    return {"base_config": None, "seed": 0}


@pytest.fixture
def config_instance(_base_args, temp_dir, request):
    args = copy.deepcopy(_base_args)
    if hasattr(request, "param"):
        filename = temp_dir.join("config.yml").strpath
        pytest.helpers.write_config_file(
            filename, request.getfixturevalue(request.param)
        )
        args["base_config"] = filename
    return config.Config(args=args, command_args={"subcommand": "run"})


@pytest.fixture
def unsafe_config_instance(_base_args):
    args = dict(_base_args, unsafe_limits=True)
    return config.Config(args=args, command_args={"subcommand": "run"})


# Mocks


@pytest.fixture
def patched_logger_info(mocker):
    return mocker.patch("logging.Logger.info")


@pytest.fixture
def patched_logger_debug(mocker):
    return mocker.patch("logging.Logger.debug")


@pytest.fixture
def patched_logger_out(mocker):
    return mocker.patch("springer_lab.logger.CustomLogger.out")


@pytest.fixture
def patched_logger_warning(mocker):
    return mocker.patch("logging.Logger.warning")


@pytest.fixture
def patched_logger_error(mocker):
    return mocker.patch("logging.Logger.error")


@pytest.fixture
def patched_logger_critical(mocker):
    return mocker.patch("logging.Logger.critical")


@pytest.fixture
def patched_logger_success(mocker):
    return mocker.patch("springer_lab.logger.CustomLogger.success")


class _ArithmeticSuite(base.Suite):
    """Arithmetic sanity checks.

    Second line of the docstring.
    """

    name = "arithmetic"

    def checks(self):
        return [
            self.check("equal", "one is one", lambda c: (1, 1)),
            self.check("unequal", "one is two", lambda c: (1, 2)),
            self.check("limit", "guarded", _raise_limit),
            self.check("broken", "raises", _raise_error),
            self.check("skipped", "not applicable", lambda c: base.skipped("n/a")),
        ]


def _raise_limit(c):
    raise gf2k.ResourceLimitError("too many", detail={"limit": 1})


def _raise_error(c):
    raise util.SpringerLabError("broken")


@pytest.fixture
def arithmetic_suite():
    return _ArithmeticSuite()


@pytest.fixture
def patched_suites(mocker, arithmetic_suite):
    suites = api.UserListMap()
    suites.append(arithmetic_suite)
    return mocker.patch("springer_lab.api.suites", return_value=suites)
