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

from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab.linalg import Mat


@pytest.fixture
def _ctx():
    return geometry.get_context(4, gf2k.get_field(1))


@pytest.fixture
def _odd_ctx():
    return geometry.get_context(3, gf2k.get_field(1))


def test_context_is_cached():
    field = gf2k.get_field(2)

    assert geometry.get_context(4, field) is geometry.get_context(4, field)


def test_context_rejects_empty_space():
    with pytest.raises(geometry.ParameterRangeError):
        geometry.FormContext(0, gf2k.get_field(1))


def test_even_context(_ctx):
    assert ["e1", "e2", "f1", "f2"] == _ctx.labels
    assert (0, 1, 0, 0) == _ctx.vector(e2=1)
    assert 1 == _ctx.form(_ctx.vector(e1=1), _ctx.vector(f1=1))
    assert 0 == _ctx.form(_ctx.vector(e1=1), _ctx.vector(f2=1))
    with pytest.raises(geometry.ParameterRangeError):
        _ctx.e(0)


def test_odd_context(_odd_ctx):
    assert ["e0", "e1", "f1"] == _odd_ctx.labels
    assert 0 == _odd_ctx.e(0)
    assert 1 == _odd_ctx.quadratic((1, 0, 0))
    assert 1 == _odd_ctx.quadratic((0, 1, 1))
    assert 0 == _odd_ctx.quadratic((1, 1, 1))
    assert 2 == _odd_ctx.symplectic_context().N


def test_context_json(_odd_ctx):
    doc = _odd_ctx.to_json()

    assert {"N": 3, "field": "gf2^1"} == doc
    assert _odd_ctx is geometry.FormContext.from_json(doc)


def test_form_is_alternating(_ctx):
    for i in range(_ctx.N):
        v = linalg.standard_vector(_ctx.N, i)
        assert 0 == _ctx.form(v, v)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_lie_algebra_dims(N):
    ctx = geometry.get_context(N, gf2k.get_field(1))

    assert N * (N + 1) // 2 == geometry.lie_algebra(ctx).dim
    assert N * (N + 1) // 2 == geometry.lie_algebra(ctx, "sp_lie").dim


def test_lie_algebra_unknown(_ctx):
    with pytest.raises(geometry.ParameterRangeError):
        geometry.lie_algebra(_ctx, "gl")


def test_membership(_ctx):
    J = _ctx.J

    assert geometry.membership(J, _ctx, "Sp")
    assert geometry.membership(J, _ctx, "O")
    assert geometry.membership(J, _ctx, "G_iota_theta")
    assert not geometry.membership(Mat.zeros(_ctx.field, 4), _ctx, "Sp")
    assert geometry.membership(Mat.zeros(_ctx.field, 4), _ctx, "g_theta_lie")


def test_membership_unknown_group(_ctx):
    with pytest.raises(geometry.ParameterRangeError) as e:
        geometry.membership(_ctx.J, _ctx, "GL")

    assert "parameter_range" == e.value.code


def test_membership_wrong_shape(_ctx):
    with pytest.raises(linalg.ShapeError):
        geometry.membership(Mat.identity(_ctx.field, 3), _ctx, "Sp")


def test_theta_fixes_sp(_ctx):
    for g in geometry.sp_generators(_ctx):
        assert g == geometry.theta(g, _ctx)


def test_decompose_and_assemble(_odd_ctx):
    for x in geometry.lie_algebra(_odd_ctx).matrices():
        parts = geometry.decompose_g_theta(x, _odd_ctx)
        assert x == geometry.assemble_g_theta(*parts, _odd_ctx)


def test_decompose_needs_odd_context(_ctx):
    with pytest.raises(geometry.ParameterRangeError):
        geometry.decompose_g_theta(Mat.zeros(_ctx.field, 4), _ctx)


def test_decompose_rejects_non_members(_odd_ctx):
    x = Mat.unit(_odd_ctx.field, 3, 3, 1, 1)

    with pytest.raises(geometry.NotInGThetaError):
        geometry.decompose_g_theta(x, _odd_ctx)


@pytest.mark.parametrize(
    "name, k, dim",
    [
        ("t", None, 2),
        ("n_s", None, 2),
        ("D", None, 2),
        ("n", None, 4),
        ("b", None, 6),
        ("D_k", 1, 1),
        ("N_k", 1, 5),
    ],
)
def test_standard_subalgebra_dims(_ctx, name, k, dim):
    assert dim == geometry.standard_subalgebra(_ctx, name, k=k).dim


def test_standard_subalgebras_lie_in_sp(_ctx):
    sp = geometry.lie_algebra(_ctx, "sp_lie")
    for name in ("t", "n", "b"):
        for y in geometry.standard_subalgebra(_ctx, name).basis.matrices():
            assert y.flatten() in sp


def test_standard_subalgebra_ranges(_ctx):
    with pytest.raises(geometry.ParameterRangeError):
        geometry.standard_subalgebra(_ctx, "D_k", k=3)
    with pytest.raises(geometry.ParameterRangeError):
        geometry.standard_subalgebra(_ctx, "M_i", i=0)
    with pytest.raises(geometry.ParameterRangeError):
        geometry.standard_subalgebra(_ctx, "z")
    with pytest.raises(geometry.ParameterRangeError):
        geometry.standard_subalgebra(_ctx, "foo")


def test_odd_only_subalgebras(_odd_ctx):
    assert 2 == geometry.standard_subalgebra(_odd_ctx, "g_V").dim
    assert 1 == geometry.standard_subalgebra(_odd_ctx, "z").dim


def test_coordinate_isotropic(_ctx):
    M = geometry.standard_subalgebra(_ctx, "M_i", i=2)

    assert 2 == M.dim
    assert M.basis.is_isotropic(_ctx.J)


def test_is_subregular():
    ctx = geometry.get_context(4, gf2k.get_field(2))

    assert geometry.is_subregular(geometry.torus_element(ctx, [1, 2]), ctx)
    assert not geometry.is_subregular(geometry.torus_element(ctx, [1, 1]), ctx)
    assert not geometry.is_subregular(ctx.J, ctx)


def test_diagonalize_split_semisimple():
    ctx = geometry.get_context(4, gf2k.get_field(2))
    s = geometry.torus_element(ctx, [1, 2])
    g = geometry.sp_generators(ctx)[-2]
    x = g * s * g.inverse()
    h = geometry.diagonalize_split_semisimple(x, ctx)

    assert geometry.membership(h, ctx, "Sp")
    assert h.inverse() * x * h in geometry.standard_subalgebra(ctx, "t")


def test_diagonalize_rejects_nilpotent(_ctx):
    x = Mat.unit(_ctx.field, 4, 4, _ctx.e(1), _ctx.f(1))

    with pytest.raises(geometry.NotSemisimpleError):
        geometry.diagonalize_split_semisimple(x, _ctx)


@pytest.mark.parametrize(
    "n, q, order", [(1, 2, 6), (1, 4, 60), (2, 2, 720), (3, 2, 1451520)]
)
def test_sp_order(n, q, order):
    assert order == geometry.sp_order(n, q)


def test_gl_order():
    assert 6 == geometry.gl_order(2, 2)
    assert 168 == geometry.gl_order(3, 2)


def test_sp_generators_are_symplectic():
    ctx = geometry.get_context(4, gf2k.get_field(2))
    for g in geometry.sp_generators(ctx):
        assert geometry.membership(g, ctx, "Sp")


@pytest.mark.parametrize("N, k, order", [(2, 1, 6), (2, 2, 60), (4, 1, 720)])
def test_group_enumerate_sp(N, k, order):
    table = geometry.group_enumerate(geometry.get_context(N, gf2k.get_field(k)))

    assert order == len(table)
    assert table.order_matches


def test_group_enumerate_by_closure_matches_scan():
    ctx = geometry.get_context(2, gf2k.get_field(1))
    scanned = geometry.group_enumerate(ctx, scan=True)
    closed = geometry.group_enumerate(ctx, scan=False)

    assert scanned.keys.tolist() == closed.keys.tolist()


def test_group_enumerate_g_theta_has_block_shape(_odd_ctx):
    table = geometry.group_enumerate(_odd_ctx, "G_theta")

    assert 6 == len(table)
    assert all(geometry.has_block_shape(g, _odd_ctx) for g in table)
    assert table.contains(Mat.identity(_odd_ctx.field, 3))


def test_group_enumerate_guard(_ctx):
    with pytest.raises(gf2k.ResourceLimitError):
        geometry.group_enumerate(_ctx, max_order=100)


def test_group_enumerate_raises_on_order_mismatch(mocker, _ctx):
    mocker.patch("springer_lab.geometry.sp_order", return_value=7)

    with pytest.raises(geometry.GroupOrderError) as e:
        geometry.group_enumerate(_ctx)

    assert {"enumerated": 720, "claimed_order": 7} == e.value.detail
    assert 1 == e.value.exit_code


def test_group_enumerate_rejects_odd_sp(_odd_ctx):
    with pytest.raises(geometry.ParameterRangeError):
        geometry.group_enumerate(_odd_ctx, "Sp")


def test_group_table_json():
    table = geometry.group_enumerate(geometry.get_context(2, gf2k.get_field(1)))
    doc = table.to_json()

    assert 6 == doc["claimed_order"]
    assert 6 == len(doc["elements"])


def test_borel_elements(_ctx):
    borels = geometry.borel_elements(_ctx)

    assert 16 == len(borels)
    assert all(geometry.membership(b, _ctx, "Sp") for b in borels)


def test_random_borel_element():
    ctx = geometry.get_context(6, gf2k.get_field(2))
    b = geometry.random_borel_element(ctx, pytest.helpers.rng())

    assert geometry.membership(b, ctx, "Sp")


def test_torus_conjugation():
    ctx = geometry.get_context(2, gf2k.get_field(2))
    tori = [geometry.torus_element(ctx, [v]) for v in ctx.field.nonzero()]
    borels = geometry.borel_elements(ctx)

    assert 0 == geometry.check_torus_conjugation(ctx, borels, tori)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_d_conjugation(_ctx, k):
    borels = geometry.borel_elements(_ctx)
    elements = geometry.d_elements(_ctx, k)

    assert 2 ** k == len(elements)
    assert 0 == geometry.check_d_conjugation(_ctx, borels, elements, k)


def test_random_d_element(_ctx):
    d = geometry.random_d_element(_ctx, 1, pytest.helpers.rng())

    assert d in geometry.standard_subalgebra(_ctx, "D_k", k=1)


def test_unipotent_bijection(_ctx):
    report = geometry.check_unipotent_bijection(_ctx)

    assert report.bijective
    assert report.unipotent == report.nilpotent
