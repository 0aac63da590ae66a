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
"""Fixed-point and conjugation identities Suite Module."""

import itertools

from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import logger
from springer_lab.suite import base

LOG = logger.get_logger(__name__)

MAX_LIE_RANK = 6


def _g_theta_order(config):
    ctx = geometry.get_context(3, gf2k.get_field(1))
    table = geometry.group_enumerate(
        ctx, "G_theta", max_order=config.limits["max_group_order"]
    )
    actual = {
        "order": len(table),
        "block_shape": all(geometry.has_block_shape(g, ctx) for g in table),
    }
    return {"order": 6, "block_shape": True}, actual


def _lie_dims(config):
    field = gf2k.get_field(1)
    expected, actual = {}, {}
    for n in range(1, MAX_LIE_RANK + 1):
        for N, dim in ((2 * n, n * (2 * n + 1)), (2 * n + 1, (n + 1) * (2 * n + 1))):
            ctx = geometry.get_context(N, field)
            expected[str(N)] = dim
            actual[str(N)] = geometry.lie_algebra(ctx).dim
    return expected, actual


def _sp_equals_g_theta(config):
    field = gf2k.get_field(1)
    expected, actual = {}, {}
    for n in range(1, MAX_LIE_RANK + 1):
        ctx = geometry.get_context(2 * n, field)
        fixed = geometry.lie_algebra(ctx, "g_theta_lie")
        sp = geometry.lie_algebra(ctx, "sp_lie")
        expected[str(2 * n)] = True
        actual[str(2 * n)] = fixed.key == sp.key
    return expected, actual


def _sp_orders(config):
    expected, actual = {}, {}
    for n, q in ((1, 2), (1, 4), (2, 2)):
        ctx = geometry.get_context(2 * n, gf2k.field_by_size(q))
        table = geometry.group_enumerate(
            ctx, "Sp", max_order=config.limits["max_group_order"]
        )
        label = "n={},q={}".format(n, q)
        expected[label] = geometry.sp_order(n, q)
        actual[label] = len(table)
    return expected, actual


def _orthogonal_in_sp(config):
    ctx = geometry.get_context(4, gf2k.get_field(1))
    table = geometry.group_enumerate(
        ctx, "Sp", max_order=config.limits["max_group_order"]
    )
    orthogonal = [g for g in table if geometry.membership(g, ctx, "O")]
    return {"order": 72}, {"order": len(orthogonal)}


def _all_tori(ctx):
    values = itertools.product(range(ctx.field.order), repeat=ctx.n)
    return [geometry.torus_element(ctx, v) for v in values]


def _torus_exhaustive(config):
    ctx = geometry.get_context(4, gf2k.get_field(1))
    borels = geometry.borel_elements(ctx)
    failures = geometry.check_torus_conjugation(ctx, borels, _all_tori(ctx))
    return 0, failures


def _d_exhaustive(config):
    ctx = geometry.get_context(4, gf2k.get_field(1))
    borels = geometry.borel_elements(ctx)
    expected, actual = {}, {}
    for k in range(ctx.n + 1):
        elements = geometry.d_elements(ctx, k)
        expected[str(k)] = 0
        actual[str(k)] = geometry.check_d_conjugation(ctx, borels, elements, k)
    return expected, actual


def _sampled_context():
    return geometry.get_context(6, gf2k.get_field(2))


def _torus_sampled(config):
    ctx = _sampled_context()
    rng = config.rng
    failures = 0
    for _ in range(config.sampling["inclusion_samples"]):
        b = geometry.random_borel_element(ctx, rng)
        s = geometry.torus_element(
            ctx, [int(ctx.field.random(rng)) for _ in range(ctx.n)]
        )
        failures += geometry.check_torus_conjugation(ctx, [b], [s])
    return 0, failures


def _d_sampled(config):
    ctx = _sampled_context()
    rng = config.rng
    failures = 0
    for _ in range(config.sampling["inclusion_samples"]):
        k = int(rng.integers(0, ctx.n + 1))
        b = geometry.random_borel_element(ctx, rng)
        d = geometry.random_d_element(ctx, k, rng)
        failures += geometry.check_d_conjugation(ctx, [b], [d], k)
    return 0, failures


def _unipotent_bijection(config):
    expected, actual = {}, {}
    for N, k in ((2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2)):
        ctx = geometry.get_context(N, gf2k.get_field(k))
        report = geometry.check_unipotent_bijection(ctx)
        label = "N={},q={}".format(N, ctx.field.order)
        expected[label] = True
        actual[label] = report.bijective and report.unipotent == report.nilpotent
    return expected, actual


class Identities(base.Suite):
    """Fixed-point structure and conjugation inclusions."""

    @property
    def name(self):
        return "identities"

    def checks(self):
        return [
            self.check(
                "g_theta_order",
                "G^theta in GL_3(F_2) has 6 elements, all of block shape diag(1, y)",
                _g_theta_order,
            ),
            self.check(
                "lie_dims",
                "dim g^theta is n(2n+1) for N = 2n and (n+1)(2n+1) for N = 2n+1, "
                "n <= 6",
                _lie_dims,
            ),
            self.check(
                "sp_equals_g_theta",
                "for even N the fixed-point Lie algebra equals sp",
                _sp_equals_g_theta,
            ),
            self.check(
                "sp_orders",
                "enumerated Sp_2n(F_q) matches the order formula",
                _sp_orders,
            ),
            self.check(
                "orthogonal_in_sp",
                "O_4(F_2) is a subgroup of Sp_4(F_2) of order 72",
                _orthogonal_in_sp,
            ),
            self.check(
                "torus_conjugation_exhaustive",
                "B t B^-1 lies in t + n_s, n = 2 over F_2",
                _torus_exhaustive,
            ),
            self.check(
                "d_conjugation_exhaustive",
                "B D_k B^-1 lies in D_k with the squared diagonal law, "
                "n = 2 over F_2",
                _d_exhaustive,
            ),
            self.check(
                "torus_conjugation_sampled",
                "B t B^-1 lies in t + n_s on random samples, n = 3 over F_4",
                _torus_sampled,
            ),
            self.check(
                "d_conjugation_sampled",
                "B D_k B^-1 lies in D_k on random samples, n = 3 over F_4",
                _d_sampled,
            ),
            self.check(
                "unipotent_bijection",
                "g -> g - 1 maps unipotents of G^{iota theta} onto nilpotents "
                "of g^theta",
                _unipotent_bijection,
            ),
        ]
