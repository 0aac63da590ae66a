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
"""Infinite family Suite Module."""

from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import orbits
from springer_lab.suite import base

LOG = logger.get_logger(__name__)

FAMILY_SIZES = (4, 8, 16)


def _family(q):
    def func(config):
        field = gf2k.field_by_size(q)
        if field.k > config.limits["max_field_degree"]:
            return base.skipped("gf2^{} is over the field degree limit".format(field.k))
        report = orbits.x_xi_family_report(1, field)
        expected = {
            "members": q - 1,
            "regular": True,
            "in_g_theta": True,
            "orbits": q - 1,
        }
        actual = {
            "members": report.members,
            "regular": report.regular,
            "in_g_theta": report.in_g_theta,
            "orbits": report.orbits,
        }
        return expected, actual

    return func


def _xi_zero(config):
    field = gf2k.get_field(2)
    expected, actual = {}, {}
    for n in (1, 2, 3):
        x = orbits.x_xi_family(n, field.zero)
        expected[str(n)] = [2 * n, 1]
        actual[str(n)] = linalg.jordan_type(x).to_json()
    return expected, actual


def _regular_higher_rank(config):
    field = gf2k.get_field(2)
    expected, actual = {}, {}
    for n in (2, 3):
        family = [
            orbits.x_xi_family(n, gf2k.FieldElem(field, bits))
            for bits in field.nonzero()
        ]
        expected[str(n)] = [2 * n + 1]
        types = {tuple(linalg.jordan_type(x)) for x in family}
        actual[str(n)] = list(types.pop()) if len(types) == 1 else sorted(types)
    return expected, actual


class InfiniteFamily(base.Suite):
    """Regular nilpotents x(xi) of the odd fixed-point algebra in distinct orbits."""

    @property
    def name(self):
        return "infinite-family"

    def checks(self):
        checks = [
            self.check(
                "orbits_q{}".format(q),
                "the {} elements x(xi), xi in F_{}^*, are regular nilpotent in "
                "g^theta and pairwise non-conjugate under G^theta".format(q - 1, q),
                _family(q),
            )
            for q in FAMILY_SIZES
        ]
        checks.append(
            self.check(
                "xi_zero", "x(0) has Jordan type (2n, 1) for n <= 3", _xi_zero
            )
        )
        checks.append(
            self.check(
                "regular_higher_rank",
                "x(xi) is regular nilpotent in gl_(2n+1) for n = 2, 3 over F_4",
                _regular_higher_rank,
            )
        )
        return checks
