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

from springer_lab import util
from springer_lab.command import orbits


@pytest.fixture
def _orbits_args():
    return {"group": "sp", "n": 1, "q": 2, "samples": 2}


def test_execute_sp(command_config, _orbits_args):
    records = orbits.Orbits(command_config("orbits", **_orbits_args)).execute()

    assert [3, 1] == [r["size"] for r in records]
    assert [2, 0] == [r["dim_estimate"] for r in records]
    assert [[[1], []], [[], [1]]] == [r["bipartition"] for r in records]
    assert all(r["orbit_constant"] for r in records)
    assert "1,1|0" == records[1]["key"]


def test_execute_sp_without_room_for_dimensions(
    command_config, _orbits_args, patched_logger_warning
):
    c = command_config(
        "orbits", args={"limits": {"max_group_order": 16}}, **_orbits_args
    )
    records = orbits.Orbits(c).execute()

    assert [None, None] == [r["dim_estimate"] for r in records]
    patched_logger_warning.assert_called_once_with(
        "Census over F_%d is out of limits, no dimensions", 4
    )


def test_execute_gl_pairs(command_config, _orbits_args):
    _orbits_args["group"] = "gl_pairs"
    records = orbits.Orbits(command_config("orbits", **_orbits_args)).execute()

    assert [[[], [1]], [[1], []]] == [r["label"] for r in records]
    assert [1, 1] == [r["size"] for r in records]
    assert 0 == records[0]["dim_estimate"]
    assert [0] == records[0]["representative"]["v"]


def test_execute_over_field_limit_exits(command_config, _orbits_args):
    _orbits_args["q"] = 8
    limits = {"limits": {"max_field_degree": 2}}
    c = command_config("orbits", args=limits, **_orbits_args)

    with pytest.raises(SystemExit) as e:
        orbits.Orbits(c).execute()

    assert 65 == e.value.code


def test_execute_rejects_non_power_of_two(command_config, _orbits_args):
    _orbits_args["q"] = 6

    with pytest.raises(util.SpringerLabError):
        orbits.Orbits(command_config("orbits", **_orbits_args)).execute()
