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

from springer_lab import config
from springer_lab import status
from springer_lab.suite import infinite_family


def test_check_ids():
    x = [c.id for c in infinite_family.InfiniteFamily().checks()]

    assert [
        "infinite-family.orbits_q4",
        "infinite-family.orbits_q8",
        "infinite-family.orbits_q16",
        "infinite-family.xi_zero",
        "infinite-family.regular_higher_rank",
    ] == x


def test_description():
    x = infinite_family.InfiniteFamily().description

    assert x.startswith("Regular nilpotents x(xi)")


def test_family_q4(config_instance):
    expected, actual = infinite_family._family(4)(config_instance)

    assert {"members": 3, "regular": True, "in_g_theta": True, "orbits": 3} == actual
    assert expected == actual


def test_family_over_field_limit_is_skipped():
    c = config.Config({"limits": {"max_field_degree": 1}})
    x = infinite_family._family(4)(c)

    assert status.SKIPPED == x.status
    assert {"skipped": "gf2^2 is over the field degree limit"} == x.actual


def test_xi_zero(config_instance):
    expected, actual = infinite_family._xi_zero(config_instance)

    assert {"1": [2, 1], "2": [4, 1], "3": [6, 1]} == expected
    assert expected == actual


def test_regular_higher_rank(config_instance):
    expected, actual = infinite_family._regular_higher_rank(config_instance)

    assert expected == actual


@pytest.mark.extensive
@pytest.mark.parametrize("q", [8, 16])
def test_family_larger_fields(config_instance, q):
    expected, actual = infinite_family._family(q)(config_instance)

    assert expected == actual
