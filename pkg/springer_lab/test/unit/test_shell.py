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

import pytest
from click.testing import CliRunner

from springer_lab import shell


@pytest.fixture
def _runner():
    return CliRunner()


def test_version(_runner):
    result = _runner.invoke(shell.cli, ["--version"])

    assert 0 == result.exit_code
    assert "springer-lab" in result.output
    assert "galois==" in result.output
    assert "numpy==" in result.output


def test_help_lists_commands(_runner):
    result = _runner.invoke(shell.cli, ["--help"])

    assert 0 == result.exit_code
    for name in ("classify", "fiber", "list", "matrix", "orbits", "run", "table"):
        assert name in result.output


def test_list_plain(_runner, patched_suites, temp_dir):
    result = _runner.invoke(shell.cli, ["list", "--format", "plain"])

    assert 0 == result.exit_code
    assert "arithmetic" in result.output


def test_run_exits_with_report_code(_runner, patched_suites, temp_dir):
    result = _runner.invoke(shell.cli, ["--seed", "3", "run", "arithmetic"])

    assert 1 == result.exit_code
    assert '"suite": "arithmetic"' in result.output


def test_table_csv(_runner, temp_dir):
    args = ["table", "compositions", "-n", "1", "--format", "csv"]
    result = _runner.invoke(shell.cli, args)

    assert 0 == result.exit_code
    x = "m,open,p1,p2,sx_m_nil,x_m,x_tilde_m,x_tilde_m_nil"
    assert x in result.output


def test_fiber_from_file(_runner, temp_dir):
    path = temp_dir.join("point.json").strpath
    with open(path, "w") as stream:
        stream.write('{"N": 2, "x": [[0, 1], [0, 0]], "v": [0, 0]}')
    result = _runner.invoke(shell.cli, ["fiber", path, "--q", "4", "--q", "2"])

    assert 0 == result.exit_code
    assert '"verified": true' in result.output


def test_main_maps_usage_errors(mocker, temp_dir):
    mocker.patch("sys.argv", ["springer-lab", "table", "springer"])

    with pytest.raises(SystemExit) as e:
        shell.main()

    assert 64 == e.value.code


def test_main_maps_domain_errors(mocker, temp_dir, patched_logger_critical):
    mocker.patch("sys.argv", ["springer-lab", "matrix", "bogus"])

    with pytest.raises(SystemExit) as e:
        shell.main()

    assert 64 == e.value.code
    patched_logger_critical.assert_called_once_with("Unknown suite 'bogus'")


def test_main_maps_missing_point_to_usage(mocker, temp_dir):
    mocker.patch("sys.argv", ["springer-lab", "fiber"])

    with pytest.raises(SystemExit) as e:
        shell.main()

    assert 64 == e.value.code
