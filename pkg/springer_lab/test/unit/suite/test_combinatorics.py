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

from springer_lab.suite import combinatorics


@pytest.fixture
def _instance():
    return combinatorics.Combinatorics()


def test_check_ids(_instance):
    x = [c.id for c in _instance.checks()]

    assert 11 == len(x)
    assert "combinatorics.sum_of_squares" == x[0]
    assert "combinatorics.steinberg_components" == x[-1]


@pytest.mark.parametrize(
    "func",
    [
        combinatorics._w_nat_order,
        combinatorics._w_nat_squares,
        combinatorics._bijection_total,
        combinatorics._nat_hat_total,
        combinatorics._open_stratum_dims,
        combinatorics._formula_examples,
        combinatorics._composition_order,
        combinatorics._table_rows,
        combinatorics._additivity,
        combinatorics._steinberg,
    ],
)
def test_check(config_instance, func):
    expected, actual = func(config_instance)

    assert expected == actual


def test_open_compositions():
    x = [(n, tuple(m)) for n, m in combinatorics._open_compositions(2)]

    assert [
        (1, (1, 0, 0)),
        (1, (0, 1, 0)),
        (2, (2, 0, 0)),
        (2, (1, 1, 0)),
        (2, (0, 2, 0)),
    ] == x


@pytest.mark.extensive
def test_sum_of_squares(config_instance):
    expected, actual = combinatorics._sum_of_squares(config_instance)

    assert expected == actual


@pytest.mark.extensive
def test_suite_passes(config_instance):
    assert 0 == combinatorics.Combinatorics().run(config_instance).exit_code
