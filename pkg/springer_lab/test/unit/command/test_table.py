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

from springer_lab.command import table


def test_execute_springer(command_config):
    rows = table.Table(command_config("table", kind="springer", n=1)).execute()

    assert ["1|-|-", "-|-|1", "-|1|-"] == [r.multipartition.slug for r in rows]
    assert [0, 1, 0] == [r.d_lambda for r in rows]


def test_execute_wnat(command_config):
    records = table.Table(command_config("table", kind="wnat", n=2)).execute()

    assert [[2, 0, 0], [1, 1, 0], [0, 2, 0]] == [r["m"] for r in records]
    x = {
        "m": [1, 1, 0],
        "order": 2,
        "stabilizer_count": 2,
        "steinberg_count": 2,
        "irreducibles": 2,
        "sum_of_squares": 2,
    }
    assert x == records[1]


def test_execute_compositions(command_config):
    records = table.Table(command_config("table", kind="compositions", n=1)).execute()

    assert 3 == len(records)
    x = {
        "m": [1, 0, 0],
        "p1": 1,
        "p2": 1,
        "open": True,
        "x_tilde_m": 4,
        "x_m": 4,
        "x_tilde_m_nil": 3,
        "sx_m_nil": 3,
    }
    assert x == records[0]
    closed = [r for r in records if not r["open"]]
    assert [None] == [r["sx_m_nil"] for r in closed]


def test_print_table_springer_csv(command_config, capsys):
    rows = table.Table(command_config("table", kind="springer", n=1)).execute()
    table.print_table("springer", rows, "csv")
    stdout, _ = capsys.readouterr()
    lines = stdout.splitlines()

    header = "lambda1,lambda2,lambda3,m1,m2,m3,k,dim_rho_hat,dim_X,d_lambda"
    assert header == lines[0]
    assert "(1),(),(),1,0,0,0,1,3,0" == lines[1]
    assert 4 == len(lines)


@pytest.mark.parametrize("format", ["json", "yaml"])
def test_print_table_springer_documents(command_config, capsys, format):
    rows = table.Table(command_config("table", kind="springer", n=1)).execute()
    table.print_table("springer", rows, format)
    stdout, _ = capsys.readouterr()

    assert "rho_nat" in stdout
    assert "provenance" in stdout
