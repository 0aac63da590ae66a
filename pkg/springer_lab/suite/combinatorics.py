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
"""Weyl group combinatorics Suite Module."""

import itertools
import math

from springer_lab import combinatorics
from springer_lab import logger
from springer_lab import orbits
from springer_lab.suite import base

LOG = logger.get_logger(__name__)

MAX_N = 6
MAX_W_NAT_N = 4
MAX_TABLE_N = 3


def _sum_of_squares(config):
    expected, actual = {}, {}
    for r, group in ((1, "S_n"), (2, "W_n2"), (3, "W_n3")):
        for n in range(MAX_N + 1):
            label = "r={},n={}".format(r, n)
            expected[label] = r ** n * math.factorial(n)
            actual[label] = combinatorics.sum_of_squares(
                combinatorics.irreducibles(group, n=n)
            )
    return expected, actual


def _open_compositions(max_n):
    for n in range(1, max_n + 1):
        for m in combinatorics.compositions(n, open_part=True):
            yield n, m


def _w_nat_order(config):
    expected, actual = {}, {}
    for n, m in _open_compositions(MAX_W_NAT_N):
        data = combinatorics.w_nat_data(n, m)
        label = str(m)
        order = math.factorial(m.m1) * 2 ** m.m2 * math.factorial(m.m2)
        expected[label] = {"order": order, "stabilizer": order}
        actual[label] = {"order": data.order, "stabilizer": data.stabilizer_count}
    return expected, actual


def _w_nat_squares(config):
    expected, actual = {}, {}
    for n, m in _open_compositions(MAX_W_NAT_N):
        label = str(m)
        expected[label] = combinatorics.group_order("W_nat", m=m)
        actual[label] = combinatorics.sum_of_squares(
            combinatorics.irreducibles("W_nat", m=m)
        )
    return expected, actual


def _bijection_total(config):
    expected, actual = {}, {}
    for n in range(MAX_N + 1):
        images = combinatorics.bijection_wn_image(n)
        labels = combinatorics.irreducibles("W_n2", n=n)
        dims = {label.label: label.dim for label in labels}
        by_image = {image.bipartition: image.dim for image in images}
        expected[str(n)] = {
            "images": len(labels),
            "distinct": len(labels),
            "dims_agree": True,
        }
        actual[str(n)] = {
            "images": len(images),
            "distinct": len(by_image),
            "dims_agree": by_image == dims,
        }
    return expected, actual


def _nat_hat_total(config):
    expected, actual = {}, {}
    for n in range(MAX_N + 1):
        hats = [
            labels.rho_hat.label
            for entries in combinatorics.grouped_labels(n).values()
            for _, labels in entries
        ]
        everything = set(combinatorics.enumerate_multipartitions(n, 3))
        expected[str(n)] = {"count": len(everything), "covers": True}
        actual[str(n)] = {"count": len(hats), "covers": set(hats) == everything}
    return expected, actual


def _open_stratum_dims(config):
    expected, actual = {}, {}
    for n, m in _open_compositions(MAX_W_NAT_N):
        multipartition = ((m.m1,), (m.m2,), ())
        dim_o2 = combinatorics.regular_sp_orbit_dim(m.m2)
        label = str(m)
        expected[label] = {
            "dim": combinatorics.dim_formulas("sx_m_nil", m=m),
            "d_lambda": 0,
        }
        actual[label] = {
            "dim": combinatorics.dim_formulas(
                "stratum", multipartition=multipartition, dim_o2=dim_o2
            ),
            "d_lambda": combinatorics.dim_formulas(
                "d_lambda", multipartition=multipartition, dim_o2=dim_o2
            ),
        }
    return expected, actual


def _formula_examples(config):
    expected = {"n_stat": 1, "gl_orbit": 4, "ah_orbit": 3, "stratum": 9}
    actual = {
        "n_stat": combinatorics.dim_formulas("n_stat", lam=(2, 1)),
        "gl_orbit": combinatorics.dim_formulas("gl_orbit", n=3, lam=(2, 1)),
        "ah_orbit": combinatorics.dim_formulas(
            "ah_orbit", n=2, bipartition=((1,), (1,))
        ),
        "stratum": combinatorics.dim_formulas(
            "stratum", multipartition=((1,), (1,), ()), dim_o2=2
        ),
    }
    return expected, actual


def _composition_order(config):
    expected, actual = {}, {}
    for n in range(MAX_N + 1):
        comps = combinatorics.compositions(n)
        partial_order = all(m.leq(m) for m in comps)
        for a, b in itertools.product(comps, repeat=2):
            if a.leq(b) and b.leq(a) and a != b:
                partial_order = False
        if n <= 4:
            for a, b, c in itertools.product(comps, repeat=3):
                if a.leq(b) and b.leq(c) and not a.leq(c):
                    partial_order = False
        expected[str(n)] = {"count": combinatorics.composition_count(n), "order": True}
        actual[str(n)] = {"count": len(comps), "order": partial_order}
    return expected, actual


def _table_rows(config):
    oracle = combinatorics.rendering_oracle(orbits.rendering_table())
    one = combinatorics.springer_table(1, oracle)
    two = combinatorics.springer_table(2, oracle)
    zero = [r for r in one if r.multipartition == ((), (), (1,))][0]
    expected = {
        "rows_n1": 3,
        "rows_n2": 9,
        "squares_n2": combinatorics.group_order("W_n3", n=2),
        "zero_stratum": {"d_lambda": 1, "dim_rho_hat": 1},
    }
    actual = {
        "rows_n1": len(one),
        "rows_n2": len(two),
        "squares_n2": sum(r.dim_rho_hat ** 2 for r in two),
        "zero_stratum": {"d_lambda": zero.d_lambda, "dim_rho_hat": zero.dim_rho_hat},
    }
    return expected, actual


def _additivity(config):
    oracle = combinatorics.rendering_oracle(orbits.rendering_table())
    expected, actual = {}, {}
    for n in range(1, MAX_TABLE_N + 1):
        for row in combinatorics.springer_table(n, oracle):
            if row.d_lambda is None:
                continue
            n_prime = row.multipartition[1].n + row.multipartition[2].n
            dim_o2 = oracle(n_prime, row.multipartition[1:])
            label = str(row.multipartition)
            expected[label] = row.d_lambda
            actual[label] = combinatorics.dim_formulas(
                "d_split", multipartition=row.multipartition, dim_o2=dim_o2
            )
    return expected, actual


def _steinberg(config):
    expected, actual = {}, {}
    for n, m in _open_compositions(MAX_W_NAT_N):
        label = str(m)
        expected[label] = combinatorics.group_order("W_nat", m=m)
        actual[label] = combinatorics.steinberg_components(n, m)
    return expected, actual


class Combinatorics(base.Suite):
    """Counting identities of the reflection groups and their labels."""

    @property
    def name(self):
        return "combinatorics"

    def checks(self):
        return [
            self.check(
                "sum_of_squares",
                "sum of dim^2 over W_(n,r) irreducibles is r^n n! for n <= 6",
                _sum_of_squares,
            ),
            self.check(
                "w_nat_order",
                "signed permutations fixing M_m1 number m1! 2^m2 m2!, n <= 4",
                _w_nat_order,
            ),
            self.check(
                "w_nat_squares",
                "sum of dim^2 over W_nat irreducibles is |W_nat|, n <= 4",
                _w_nat_squares,
            ),
            self.check(
                "bijection_wn",
                "induction from S_k x S_(n-k) is a dimension preserving "
                "bijection onto W_n irreducibles, n <= 6",
                _bijection_total,
            ),
            self.check(
                "nat_hat_total",
                "grouping by open compositions hits every W_(n,3) label once, "
                "n <= 6",
                _nat_hat_total,
            ),
            self.check(
                "open_stratum_dims",
                "the open stratum has dimension 2n^2 + m1 and d = 0, n <= 4",
                _open_stratum_dims,
            ),
            self.check(
                "formula_examples",
                "dimension formulas on worked examples",
                _formula_examples,
            ),
            self.check(
                "composition_order",
                "compositions number (n+1)(n+2)/2 and <= is a partial order",
                _composition_order,
            ),
            self.check(
                "springer_table",
                "the table has 3 rows at n = 1 and 9 rows at n = 2 with "
                "sum of dim^2 = 18",
                _table_rows,
            ),
            self.check(
                "d_additivity",
                "d splits as n(lambda1) plus the symplectic part, n <= 3",
                _additivity,
            ),
            self.check(
                "steinberg_components",
                "Steinberg pieces of top dimension 2n^2 + m1 number |W_nat|, "
                "n <= 4",
                _steinberg,
            ),
        ]
