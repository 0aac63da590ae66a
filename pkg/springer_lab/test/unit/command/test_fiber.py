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

import click
import pytest

from springer_lab import combinatorics
from springer_lab.command import base
from springer_lab.command import fiber


@pytest.fixture
def _document():
    return {"N": 2, "x": [[0, 0], [0, 0]], "v": [0, 0], "q_values": [2, 4, 8]}


def _execute(command_config, **command_args):
    defaults = {
        "document": None,
        "stratum": None,
        "variant": None,
        "q_values": [],
        "degree": None,
    }
    defaults.update(command_args)
    return fiber.Fiber(command_config("fiber", **defaults)).execute()


def test_execute_zero_point(command_config, _document):
    x = _execute(command_config, document=_document)

    assert [3, 5, 9] == [p["count"] for p in x["series"]]
    assert 1 == x["fit"]["degree"]
    assert [1, 1] == x["fit"]["coefficients"]
    assert x["verified"]
    assert "full" == x["variant"]
    assert x["stratum"] is None
    assert 0 == x["m1"]


def test_execute_with_degree(command_config, _document):
    x = _execute(command_config, document=_document, degree=0)

    assert not x["fit"]["fitted"]
    assert not x["verified"]
    assert 0 == x["fit"]["requested_degree"]


def test_execute_exact_fit_is_not_verified(command_config, _document):
    x = _execute(command_config, document=_document, q_values=[2, 4], degree=1)

    assert x["fit"]["fitted"]
    assert not x["verified"]


def test_execute_arguments_override_document(command_config, _document):
    _document["v"] = [1, 0]
    _document["m1"] = 0
    x = _execute(command_config, document=_document, variant="restricted")

    assert "restricted" == x["variant"]
    assert [0, 0, 0] == [p["count"] for p in x["series"]]


def test_execute_uses_configured_field_sizes(command_config, _document):
    del _document["q_values"]
    c = command_config(
        "fiber",
        args={"fibers": {"q_values": [2, 4]}},
        document=_document,
        stratum=None,
        variant=None,
        q_values=[],
        degree=None,
    )
    x = fiber.Fiber(c).execute()

    assert [2, 4] == [p["q"] for p in x["series"]]


def test_execute_stratum(command_config):
    x = _execute(command_config, stratum="2|-|-", q_values=[2, 4])

    assert 4 == x["N"]
    assert 2 == x["m1"]
    assert [1, 1] == [p["count"] for p in x["series"]]
    assert 0 == x["fit"]["degree"]
    assert x["verified"]
    y = {"label": "2|-|-", "attempts": 1, "accepted": True, "stabilizing_count": 1}
    assert y == x["stratum"]


def test_execute_stratum_needs_three_partitions(command_config):
    with pytest.raises(base.InvalidInputError):
        _execute(command_config, stratum="1|1")


def test_execute_malformed_stratum_raises(command_config):
    with pytest.raises(combinatorics.LabelError):
        _execute(command_config, stratum="one|-|-")


def test_execute_without_point_raises(command_config):
    with pytest.raises(click.UsageError):
        _execute(command_config)


def test_execute_invalid_document_raises(command_config, _document):
    _document["N"] = 3

    with pytest.raises(base.InvalidInputError) as e:
        _execute(command_config, document=_document)

    assert {"N": ["must be even"]} == e.value.detail


def test_execute_over_field_limit_exits(command_config, _document):
    with pytest.raises(SystemExit) as e:
        _execute(command_config, document=_document, q_values=[2 ** 17])

    assert 65 == e.value.code
