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
from springer_lab import orbits
from springer_lab.linalg import Mat
from springer_lab.linalg import Partition
from springer_lab.linalg import Subspace


@pytest.fixture
def _ctx():
    return geometry.get_context(2, gf2k.get_field(1))


@pytest.fixture
def _regular(_ctx):
    return Mat(_ctx.field, [[0, 1], [0, 0]])


@pytest.fixture
def _lagrangian(_ctx):
    return Subspace.span(_ctx.field, 2, [(1, 0)])


def test_fingerprint_of_zero(_ctx):
    fp = orbits.sp_nilpotent_fingerprint(Mat.zeros(_ctx.field, 2), _ctx)

    assert Partition([1, 1]) == fp.jordan
    assert (0,) == fp.eps
    assert "1,1|0" == fp.key
    assert 1 == fp.n


def test_fingerprint_of_regular(_ctx, _regular):
    fp = orbits.sp_nilpotent_fingerprint(_regular, _ctx)

    assert {"jordan_type": [2], "eps": [0, 1]} == fp.to_json()
    assert "(2)[0, 1]" == str(fp)


def test_fingerprint_is_conjugation_invariant(_ctx, _regular):
    fp = orbits.sp_nilpotent_fingerprint(_regular, _ctx)
    for g in geometry.group_enumerate(_ctx):
        y = g * _regular * g.inverse()
        assert fp == orbits.sp_nilpotent_fingerprint(y, _ctx)


def test_fingerprint_needs_even_context():
    ctx = geometry.get_context(3, gf2k.get_field(1))

    with pytest.raises(orbits.PreconditionError):
        orbits.sp_nilpotent_fingerprint(Mat.zeros(ctx.field, 3), ctx)


def test_fingerprint_needs_sp_element(_ctx):
    x = Mat(_ctx.field, [[1, 0], [0, 0]])

    with pytest.raises(orbits.PreconditionError) as e:
        orbits.sp_nilpotent_fingerprint(x, _ctx)

    assert "precondition" == e.value.code


def test_rendering_table():
    table = orbits.rendering_table()
    regular = orbits.OrbitFingerprint(Partition([2]), (0, 1))

    assert table is orbits.rendering_table()
    assert 3 <= table.max_n
    assert (Partition([1]), Partition()) == table.render(regular)
    assert 6 == table.dim(2, (Partition([1]), Partition([1])))
    assert table.entry_for(2, (Partition([5]), Partition())) is None
    assert 5 == len(table.for_n(2))
    assert 2 <= len(table.ties())


def test_rendering_table_unknown_fingerprint():
    fp = orbits.OrbitFingerprint(Partition([3]), (0, 0, 0))

    assert orbits.rendering_table().render(fp) is None


@pytest.mark.parametrize(
    "v, lambda1, lambda2", [((0, 1), [2], []), ((1, 0), [1], [1]), ((0, 0), [], [2])]
)
def test_ah_pair_label(_regular, v, lambda1, lambda2):
    label = orbits.ah_pair_label(_regular, v)

    assert [lambda1, lambda2] == label.to_json()
    assert Partition([2]) == label.lambda1 + label.lambda2


def test_ah_pair_label_of_zero(_ctx):
    label = orbits.ah_pair_label(Mat.zeros(_ctx.field, 2), (1, 0))

    assert "((1,1), ())" == str(label)


def test_stratum_label_of_zero(_ctx, _lagrangian):
    x = Mat.zeros(_ctx.field, 2)
    label = orbits.stratum_label(x, (0, 0), _lagrangian, _ctx)

    assert Partition() == label.lambda1
    assert [[], [], [1]] == label.to_json()["multipartition"]


def test_stratum_label_with_vector(_ctx, _lagrangian):
    x = Mat.zeros(_ctx.field, 2)
    label = orbits.stratum_label(x, (1, 0), _lagrangian, _ctx)

    assert [[1], [], []] == label.to_json()["multipartition"]


def test_stratum_label_of_regular(_ctx, _regular, _lagrangian):
    label = orbits.stratum_label(_regular, (0, 0), _lagrangian, _ctx)
    x = {
        "lambda1": [],
        "sp_part": {"jordan_type": [2], "eps": [0, 1]},
        "rendered": [[1], []],
        "multipartition": [[], [1], []],
    }

    assert x == label.to_json()


def test_stratum_label_is_simultaneously_invariant(_ctx, _regular, _lagrangian):
    label = orbits.stratum_label(_regular, (1, 0), _lagrangian, _ctx)
    for g in geometry.group_enumerate(_ctx):
        M = Subspace.span(_ctx.field, 2, [g.apply(b) for b in _lagrangian.basis])
        y = g * _regular * g.inverse()
        assert label == orbits.stratum_label(y, g.apply((1, 0)), M, _ctx)


def test_stratum_label_without_table(_ctx, _regular, _lagrangian):
    label = orbits.stratum_label(_regular, (0, 0), _lagrangian, _ctx, table=False)

    assert label.multipartition is None
    assert label.to_json()["rendered"] is None


@pytest.mark.parametrize(
    "x, v, M",
    [
        ([[1, 0], [0, 1]], (0, 0), [(1, 0)]),
        ([[0, 1], [0, 0]], (0, 1), [(1, 0)]),
        ([[0, 0], [1, 0]], (0, 0), [(1, 0)]),
        ([[0, 0], [0, 0]], (0, 0), [(1, 0), (0, 1)]),
    ],
)
def test_stratum_label_preconditions(_ctx, x, v, M):
    with pytest.raises(orbits.PreconditionError):
        orbits.stratum_label(
            Mat(_ctx.field, x), v, Subspace.span(_ctx.field, 2, M), _ctx
        )


def test_stratum_label_equality():
    a = orbits.StratumLabel(Partition([1]), "foo", None)
    b = orbits.StratumLabel(Partition([1]), "foo", (Partition(), Partition()))

    assert a == b
    assert hash(a) == hash(b)
    assert a != orbits.StratumLabel(Partition(), "foo")


def test_union_find():
    uf = orbits.UnionFind(range(5))
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 4)

    assert 2 == len(uf)
    assert uf.find(0) == uf.find(3)
    assert 4 == uf.size[uf.find(0)]
    assert 2 in uf


def test_orbit_partition(_ctx):
    nilpotents = orbits.nilpotent_matrices(_ctx)
    parts = orbits.orbit_partition(nilpotents, geometry.group_enumerate(_ctx))

    assert 4 == len(nilpotents)
    assert [1, 3] == sorted(len(p) for p in parts)


def test_orbit_partition_pair_action(_ctx, _regular):
    pairs = [(_regular, v) for v in [(0, 0), (1, 0), (0, 1), (1, 1)]]
    gens = [Mat(_ctx.field, [[1, 1], [0, 1]])]

    # the unipotent centralizer moves (0, 1) to (1, 1)
    assert [[(0, 0)], [(1, 0)], [(0, 1), (1, 1)]] == [
        [v for _, v in orbit]
        for orbit in orbits.orbit_partition(pairs, gens, "pair_action")
    ]


def test_orbit_partition_closure_error(_ctx, _regular):
    with pytest.raises(orbits.OrbitClosureError):
        orbits.orbit_partition([_regular], geometry.sp_generators(_ctx))


def test_conjugacy_test(_ctx, _regular):
    group = geometry.group_enumerate(_ctx)
    y = Mat(_ctx.field, [[0, 0], [1, 0]])
    g = orbits.conjugacy_test(_regular, y, group)

    assert g * _regular == y * g
    assert orbits.conjugacy_test(_regular, Mat.zeros(_ctx.field, 2), group) is None


def test_x_xi_family():
    field = gf2k.get_field(2)
    ctx = geometry.get_context(5, field)
    x = orbits.x_xi_family(2, field.generator)

    assert geometry.membership(x, ctx, "g_theta_lie")
    assert Partition([5]) == linalg.jordan_type(x)


def test_x_xi_family_at_zero():
    x = orbits.x_xi_family(2, gf2k.get_field(2).zero)

    assert Partition([4, 1]) == linalg.jordan_type(x)


def test_x_xi_family_rejects_zero_rank():
    with pytest.raises(geometry.ParameterRangeError):
        orbits.x_xi_family(0, gf2k.get_field(1).one)


def test_x_xi_family_report():
    report = orbits.x_xi_family_report(1, gf2k.get_field(2))

    assert 4 == report.q
    assert 3 == report.members
    assert 3 == report.orbits
    assert report.regular
    assert report.in_g_theta


def test_sp_nilpotent_census(_ctx):
    census = orbits.sp_nilpotent_census(_ctx)

    assert 4 == len(census.keys)
    assert [1, 3] == sorted(census.sizes.tolist())


def test_sp_nilpotent_census_rank_two():
    census = orbits.sp_nilpotent_census(geometry.get_context(4, gf2k.get_field(1)))

    assert 5 == len(census.roots)


def test_sp_nilpotent_census_guard(_ctx):
    with pytest.raises(gf2k.ResourceLimitError):
        orbits.sp_nilpotent_census(_ctx, max_size=4)


def test_sp_nilpotent_census_with_workers(_ctx):
    serial = orbits.sp_nilpotent_census(_ctx)
    parallel = orbits.sp_nilpotent_census(_ctx, jobs=2)

    assert serial.keys.tolist() == parallel.keys.tolist()


@pytest.mark.parametrize("n, count", [(1, 2), (2, 5), (3, 10)])
def test_gl_pair_census(n, count):
    census = orbits.gl_pair_census(gf2k.get_field(1), n)

    assert count == len(census.roots)


def test_gl_pair_census_guard():
    with pytest.raises(gf2k.ResourceLimitError):
        orbits.gl_pair_census(gf2k.get_field(1), 2, max_size=10)


def test_census_pair():
    census = orbits.gl_pair_census(gf2k.get_field(1), 2)
    for index in range(len(census.keys)):
        x, v = orbits.census_pair(census, index)
        assert x.is_nilpotent()
        assert 2 == len(v)


def test_sample_indices():
    rng = pytest.helpers.rng()
    members = list(range(10))

    assert members == orbits.sample_indices(rng, members, None)
    assert members == orbits.sample_indices(rng, members, 20)
    sample = orbits.sample_indices(rng, members, 4).tolist()
    assert 4 == len(sample)
    assert sorted(sample) == sample


def test_orbit_report(_ctx):
    census = orbits.sp_nilpotent_census(_ctx)
    records = orbits.orbit_report(_ctx, census, pytest.helpers.rng(), samples=None)

    assert [3, 1] == [r.size for r in records]
    assert (Partition([1]), Partition()) == records[0].bipartition
    assert all(r.constant for r in records)
    assert all(r.dim_estimate is None for r in records)


def test_attach_dimensions(_ctx):
    other = geometry.get_context(2, gf2k.get_field(2))
    rng = pytest.helpers.rng()
    records = orbits.orbit_report(_ctx, orbits.sp_nilpotent_census(_ctx), rng)
    other_records = orbits.orbit_report(
        other, orbits.sp_nilpotent_census(other), rng
    )
    records = orbits.attach_dimensions(records, other_records, 2, 4)

    assert [2, 0] == [r.dim_estimate for r in records]


def test_estimate_dimension():
    assert 2 == orbits.estimate_dimension(3, 2, 15, 4)
    assert 0 == orbits.estimate_dimension(1, 2, 1, 4)
