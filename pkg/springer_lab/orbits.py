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
"""Orbits, conjugacy invariants and labels Module."""

import collections
import math
import os

import numpy as np

from springer_lab import batch
from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import util
from springer_lab.linalg import Mat
from springer_lab.linalg import Partition

LOG = logger.get_logger(__name__)

RENDERING_FILE = os.path.join(os.path.dirname(__file__), "data", "rendering.yml")


class OrbitClosureError(util.SpringerLabError):
    """The image of an element left the set being partitioned."""

    code = "orbit_closure"


class PreconditionError(util.SpringerLabError):
    """Input violates the documented preconditions."""

    code = "precondition"


class OrbitFingerprint(collections.namedtuple("OrbitFingerprint", ["jordan", "eps"])):
    """
    Jordan type plus the quadratic indicator sequence.

    ``eps[m - 1]`` is 1 iff some ``v`` in ``ker x^m`` has
    ``<x^(m-1) v, v> != 0``.
    """

    __slots__ = ()

    @property
    def key(self):
        return "{}|{}".format(
            ",".join(str(p) for p in self.jordan.parts),
            ",".join(str(e) for e in self.eps),
        )

    @property
    def n(self):
        return self.jordan.n // 2

    def to_json(self):
        return {"jordan_type": self.jordan.to_json(), "eps": list(self.eps)}

    def __str__(self):
        return "{}{}".format(self.jordan, list(self.eps))


def fingerprint_with_gram(x, gram):
    """Fingerprint of a nilpotent ``x`` self-adjoint for an alternating ``gram``."""
    jordan = linalg.jordan_type(x)
    field = x.field
    eps = []
    previous = Mat.identity(field, x.rows)
    for m in range(1, (jordan.parts[0] if jordan.parts else 0) + 1):
        kernel = linalg.rref_rank_kernel(previous * x)[2]
        value = any(
            linalg.bilinear(field, gram, previous.apply(b), b) for b in kernel.basis
        )
        eps.append(1 if value else 0)
        previous = previous * x
    return OrbitFingerprint(jordan, tuple(eps))


def sp_nilpotent_fingerprint(x, ctx):
    """
    Conjugacy invariant of a nilpotent element of ``sp``.

    The map ``v -> <x^(m-1) v, v>`` is additive on ``ker x^m``, so testing a
    basis is enough.
    """
    if ctx.is_odd:
        raise PreconditionError("Fingerprints are defined in an even context")
    if not geometry.membership(x, ctx, "sp_lie"):
        raise PreconditionError("Matrix is not in sp", detail=x.to_json())
    return fingerprint_with_gram(x, ctx.J)


RenderEntry = collections.namedtuple(
    "RenderEntry", ["n", "fingerprint", "bipartition", "dim", "tied"]
)


class RenderingTable(object):
    """Lookup from fingerprints to bipartitions, loaded from YAML."""

    def __init__(self, filename=RENDERING_FILE):
        """Construct RenderingTable."""
        self.filename = filename
        doc = util.safe_load_file(filename)
        self.version = doc.get("version")
        self.provenance = doc.get("provenance")
        self.entries = []
        for item in doc.get("orbits", []):
            fingerprint = OrbitFingerprint(
                Partition(item["jordan_type"]), tuple(item["eps"])
            )
            mu, nu = item["bipartition"]
            self.entries.append(
                RenderEntry(
                    item["n"],
                    fingerprint,
                    (Partition(mu), Partition(nu)),
                    item["dim"],
                    bool(item.get("tied", False)),
                )
            )
        self._by_key = {e.fingerprint.key: e for e in self.entries}
        self._by_bipartition = {(e.n, e.bipartition): e for e in self.entries}

    @property
    def max_n(self):
        return max(e.n for e in self.entries)

    def lookup(self, fingerprint):
        return self._by_key.get(fingerprint.key)

    def render(self, fingerprint):
        entry = self.lookup(fingerprint)
        return entry.bipartition if entry else None

    def entry_for(self, n, bipartition):
        return self._by_bipartition.get((n, tuple(bipartition)))

    def for_n(self, n):
        return [e for e in self.entries if e.n == n]

    def dim(self, n, bipartition):
        entry = self.entry_for(n, bipartition)
        return entry.dim if entry else None

    def ties(self):
        return [e for e in self.entries if e.tied]


@util.lru_cache(maxsize=None)
def rendering_table():
    return RenderingTable()


class PairLabel(collections.namedtuple("PairLabel", ["lambda1", "lambda2"])):
    """Bipartition attached to a nilpotent pair ``(x, v)``."""

    __slots__ = ()

    def to_json(self):
        return [self.lambda1.to_json(), self.lambda2.to_json()]

    def __str__(self):
        return "({}, {})".format(self.lambda1, self.lambda2)


def ah_pair_label(x, v):
    """
    Label a nilpotent pair through ``W = E^x v``.

    ``lambda1`` is the Jordan type of ``x`` on ``W``, ``lambda2`` its type on
    ``V / W``; their partwise sum is the Jordan type of ``x``.
    """
    algebra = linalg.centralizer_algebra(x)
    W = linalg.algebra_orbit_of_vector(algebra, v)
    on_w, on_quotient = linalg.restrict_and_quotient(x, W)
    return PairLabel(linalg.jordan_type(on_w), linalg.jordan_type(on_quotient))


class StratumLabel(object):
    """Label of a point ``(x, v)`` of the nilpotent cone relative to a Lagrangian."""

    def __init__(self, lambda1, sp_part, rendered=None):
        """Construct StratumLabel."""
        self.lambda1 = lambda1
        self.sp_part = sp_part
        self.rendered = rendered

    @property
    def multipartition(self):
        if self.rendered is None:
            return None
        return (self.lambda1,) + tuple(self.rendered)

    def __eq__(self, other):
        if not isinstance(other, StratumLabel):
            return NotImplemented
        return (self.lambda1, self.sp_part) == (other.lambda1, other.sp_part)

    def __hash__(self):
        return hash((self.lambda1, self.sp_part))

    def __repr__(self):
        return "StratumLabel({}, {}, {})".format(
            self.lambda1, self.sp_part, self.rendered
        )

    def to_json(self):
        return {
            "lambda1": self.lambda1.to_json(),
            "sp_part": self.sp_part.to_json(),
            "rendered": None
            if self.rendered is None
            else [p.to_json() for p in self.rendered],
            "multipartition": None
            if self.rendered is None
            else [p.to_json() for p in self.multipartition],
        }


def check_stratum_input(x, v, M, ctx):
    if ctx.is_odd:
        raise PreconditionError("Strata are defined in an even context")
    if not geometry.membership(x, ctx, "sp_lie"):
        raise PreconditionError("x is not in sp")
    if not x.is_nilpotent():
        raise PreconditionError("x is not nilpotent")
    if M.dim != ctx.n or not M.is_isotropic(ctx.J):
        raise PreconditionError("M is not a Lagrangian subspace")
    if not M.is_stable(x):
        raise PreconditionError("M is not stable under x")
    if not M.contains(v):
        raise PreconditionError("v is not in M")


def stratum_label(x, v, M, ctx, table=None):
    """
    Label ``(x, v)`` through the Lagrangian ``M``.

    With ``x' = x|M`` and ``W = E^{x'} v``, ``lambda1`` is the Jordan type of
    ``x'`` on ``W`` and the symplectic part is the fingerprint of the map
    induced on ``W^perp / W``. The label depends on ``M``; it is invariant
    when ``(x, v, M)`` is conjugated simultaneously.
    """
    check_stratum_input(x, v, M, ctx)
    field = x.field
    x_on_m = linalg.restrict(x, M)
    v_on_m = M.coordinates(v)
    algebra = linalg.centralizer_algebra(x_on_m) if M.dim else None
    if algebra is None:
        w_coords = linalg.Subspace.zero(field, 0)
    else:
        w_coords = linalg.algebra_orbit_of_vector(algebra, v_on_m)
    lambda1 = linalg.jordan_type(linalg.restrict(x_on_m, w_coords))
    W = linalg.Subspace.span(field, ctx.N, [M.combine(w) for w in w_coords.basis])
    induced, gram = linalg.induced_form_and_map(x, ctx.J, W)
    sp_part = fingerprint_with_gram(induced, gram)
    table = rendering_table() if table is None else table
    rendered = table.render(sp_part) if table else None
    return StratumLabel(lambda1, sp_part, rendered)


class UnionFind(object):
    """Disjoint sets over hashable elements, union by rank."""

    def __init__(self, elements):
        """Construct UnionFind."""
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in self.parent}
        self.size = {x: 1 for x in self.parent}

    def __contains__(self, x):
        return x in self.parent

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]

    def reps(self):
        return set(self.rank)

    def __len__(self):
        return len(self.rank)


def _action_key(item):
    if isinstance(item, Mat):
        return item.key
    x, v = item
    return (x.key, tuple(v))


def orbit_partition(elements, generators, action="conjugation"):
    """
    Partition ``elements`` into orbits of the group spanned by ``generators``.

    :param elements: Matrices, or ``(x, v)`` pairs for ``pair_action``.
    :param generators: A :class:`GroupTable` or a list of :class:`Mat`.
    :param action: ``conjugation`` or ``pair_action``.
    :return: list of orbits, each a list of elements in input order
    """
    if isinstance(generators, geometry.GroupTable):
        generators = generators.generators
    elements = list(elements)
    by_key = collections.OrderedDict((_action_key(e), e) for e in elements)
    uf = UnionFind(by_key)
    for g in generators:
        g_inv = g.inverse()
        for key, item in by_key.items():
            if action == "conjugation":
                image = g * item * g_inv
            elif action == "pair_action":
                x, v = item
                image = (g * x * g_inv, g.apply(v))
            else:
                raise geometry.ParameterRangeError("Unknown action '{}'".format(action))
            image_key = _action_key(image)
            if image_key not in uf:
                raise OrbitClosureError("Image escapes the element set")
            uf.union(key, image_key)
    orbits = collections.OrderedDict()
    for key, item in by_key.items():
        orbits.setdefault(uf.find(key), []).append(item)
    return list(orbits.values())


def conjugacy_test(x, y, group):
    """Return ``g`` with ``g x g^-1 = y``, or ``None``."""
    for g in group.elements:
        if g * x == y * g:
            return g
    return None


def x_xi_family(n, xi):
    """
    The element ``x(xi)`` of the odd fixed-point Lie algebra, ``N = 2n + 1``.

    It shifts ``e_n -> e_(n-1) -> .. -> e_1 -> 0`` on the ``e`` block and its
    adjoint on the ``f`` block, sends ``f_n`` to ``e_n`` and couples ``e_0``
    with ``f_n`` through ``xi``.
    """
    if n < 1:
        raise geometry.ParameterRangeError("n must be at least 1", detail={"n": n})
    field = xi.field
    ctx = geometry.get_context(2 * n + 1, field)
    data = [[0] * ctx.N for _ in range(ctx.N)]
    for i in range(2, n + 1):
        data[ctx.e(i - 1)][ctx.e(i)] = 1
        data[ctx.f(i)][ctx.f(i - 1)] = 1
    data[ctx.e(n)][ctx.f(n)] = 1
    data[0][ctx.f(n)] = int(xi)
    data[ctx.e(n)][0] = int(xi)
    return Mat(field, data)


OrbitCensus = collections.namedtuple(
    "OrbitCensus", ["field", "shape", "keys", "labels", "roots", "sizes"]
)


def _inverse_permutation(index):
    inverse = np.empty_like(index)
    inverse[index] = np.arange(len(index))
    return inverse


def _propagate(permutations, count):
    """Connected components of the union of permutation graphs, min-label."""
    labels = np.arange(count)
    edges = []
    for index in permutations:
        edges.append(index)
        edges.append(_inverse_permutation(index))
    while True:
        updated = labels
        for index in edges:
            updated = np.minimum(updated, updated[index])
        updated = updated[updated]
        if np.array_equal(updated, labels):
            return labels
        labels = updated


def _census(field, shape, keys, permutations):
    labels = _propagate(permutations, len(keys))
    roots, sizes = np.unique(labels, return_counts=True)
    return OrbitCensus(field, shape, keys, labels, roots, sizes)


def _nilpotent_keys(args):
    k, basis_rows, shape, start, stop = args
    field = gf2k.get_field(k)
    basis = np.array(basis_rows, dtype=np.uint16).reshape((-1,) + shape)
    coeffs = batch.digits(field, start, stop, basis.shape[0])
    table = batch.mul_table(k)
    out = np.zeros((len(coeffs),) + shape, dtype=np.uint16)
    for i in range(basis.shape[0]):
        out ^= table[coeffs[:, i, None, None], basis[None, i]]
    return batch.encode(field, out[batch.nilpotent_mask(field, out)])


def nilpotent_keys(field, algebra, jobs=1, chunk=batch.DEFAULT_CHUNK):
    """
    Sorted keys of the nilpotent elements of a matrix subspace.

    The span is scanned in chunks, optionally over ``jobs`` processes.
    """
    batch.check_field(field)
    shape = algebra.shape
    basis_rows = [list(v) for v in algebra.basis]
    total = field.order ** algebra.dim
    tasks = [
        (field.k, basis_rows, shape, start, min(total, start + chunk))
        for start in range(0, total, chunk)
    ]
    parts = util.parallel_map(_nilpotent_keys, tasks, jobs)
    return np.sort(np.concatenate(parts)) if parts else np.zeros(0, dtype=np.int64)


def _conjugation_permutations(field, keys, shape, generators):
    mats = batch.decode(field, keys, shape)
    permutations = []
    for g in generators:
        g_arr = batch.to_array([g])
        g_inv = batch.to_array([g.inverse()])
        images = batch.matmul(field, batch.matmul(field, g_arr, mats), g_inv)
        index = batch.lookup(keys, batch.encode(field, images))
        if (index < 0).any():
            raise OrbitClosureError("Conjugation leaves the nilpotent set")
        permutations.append(index)
    return permutations


def enumerate_nilpotents(ctx, which="g_theta_lie", jobs=1, max_size=None):
    """
    Nilpotent points of ``sp`` or of the fixed-point Lie algebra.

    :return: sorted int64 keys, decoded with :func:`batch.decode`
    """
    field = ctx.field
    algebra = geometry.lie_algebra(ctx, which)
    scanned = field.order ** algebra.dim
    if max_size is not None and scanned > max_size:
        raise gf2k.ResourceLimitError(
            "Scanning {} elements exceeds the limit {}".format(scanned, max_size),
            detail={"scanned": scanned, "max_size": max_size},
        )
    LOG.debug("Scanning %d elements of %s over %s", scanned, ctx, field.name)
    return nilpotent_keys(field, algebra, jobs)


def nilpotent_matrices(ctx, which="g_theta_lie", jobs=1, max_size=None):
    keys = enumerate_nilpotents(ctx, which, jobs, max_size)
    shape = (ctx.N, ctx.N)
    return [batch.to_mat(ctx.field, a) for a in batch.decode(ctx.field, keys, shape)]


def sp_nilpotent_census(ctx, jobs=1, max_size=None):
    """
    Orbits of ``Sp`` (or ``G^θ``) on the nilpotent elements of its Lie algebra.

    :param ctx: The :class:`FormContext`.
    :param jobs: Worker processes for the scan.
    :param max_size: Resource guard on the size of the scanned span.
    :return: :class:`OrbitCensus`
    """
    field = ctx.field
    keys = enumerate_nilpotents(ctx, "g_theta_lie", jobs, max_size)
    shape = (ctx.N, ctx.N)
    perms = _conjugation_permutations(field, keys, shape, geometry.sp_generators(ctx))
    return _census(field, shape, keys, perms)


def gl_pair_census(field, n, max_size=None):
    """Orbits of ``GL_n`` on pairs ``(x, v)`` with ``x`` nilpotent."""
    shape = (n, n)
    algebra = linalg.Subspace.full(field, n * n, shape)
    if max_size is not None and field.order ** (n * n + n) > max_size:
        raise gf2k.ResourceLimitError("Pair census exceeds the resource limit")
    x_keys = nilpotent_keys(field, algebra)
    vectors = batch.digits(field, 0, field.order ** n, n)
    v_keys = batch.encode(field, vectors)
    span = np.int64(field.order) ** (n)
    keys = (x_keys[:, None] * span + v_keys[None, :]).reshape(-1)
    order = np.argsort(keys)
    keys = keys[order]
    mats = batch.decode(field, keys // span, shape)
    vecs = batch.decode(field, keys % span, (n,))
    permutations = []
    for g in geometry.gl_generators(field, n):
        g_arr = batch.to_array([g])
        g_inv = batch.to_array([g.inverse()])
        image_x = batch.matmul(field, batch.matmul(field, g_arr, mats), g_inv)
        image_v = batch.apply(field, g_arr, vecs)
        image = batch.encode(field, image_x) * span + batch.encode(field, image_v)
        index = batch.lookup(keys, image)
        if (index < 0).any():
            raise OrbitClosureError("Pair action leaves the nilpotent pairs")
        permutations.append(index)
    return _census(field, (shape, (n,)), keys, permutations)


def census_members(census, root):
    return np.flatnonzero(census.labels == root)


def census_matrix(census, index):
    return batch.to_mat(
        census.field, batch.decode(census.field, census.keys[[index]], census.shape)[0]
    )


def census_pair(census, index):
    field = census.field
    shape, (n,) = census.shape
    span = np.int64(field.order) ** n
    key = census.keys[[index]]
    x = batch.to_mat(field, batch.decode(field, key // span, shape)[0])
    v = tuple(int(e) for e in batch.decode(field, key % span, (n,))[0])
    return x, v


def sample_indices(rng, members, samples):
    """Up to ``samples`` sorted random members, all of them when ``samples`` is None."""
    if samples is None or len(members) <= samples:
        return members
    return np.sort(rng.choice(members, size=samples, replace=False))


OrbitRecord = collections.namedtuple(
    "OrbitRecord",
    [
        "fingerprint",
        "size",
        "dim_estimate",
        "bipartition",
        "constant",
        "representative",
    ],
)


def orbit_report(ctx, census, rng, samples=8, table=None):
    """
    Summarize a nilpotent census orbit by orbit.

    The fingerprint is computed on the representative and on up to
    ``samples`` random members (all members when ``samples`` is None) to
    check it is orbit-constant.
    """
    table = rendering_table() if table is None else table
    records = []
    for root, size in zip(census.roots, census.sizes):
        representative = census_matrix(census, root)
        fingerprint = sp_nilpotent_fingerprint(representative, ctx)
        members = sample_indices(rng, census_members(census, root), samples)
        constant = all(
            sp_nilpotent_fingerprint(census_matrix(census, i), ctx) == fingerprint
            for i in members
        )
        records.append(
            OrbitRecord(
                fingerprint,
                int(size),
                None,
                table.render(fingerprint) if table else None,
                constant,
                representative,
            )
        )
    records.sort(
        key=lambda r: (r.fingerprint.jordan.parts, r.fingerprint.eps), reverse=True
    )
    return records


def estimate_dimension(size1, q1, size2, q2):
    """
    Dimension estimate from point counts at two field sizes.

    >>> estimate_dimension(3, 2, 15, 4)
    2
    """
    return int(round(math.log(size2 / size1) / math.log(q2 / q1)))


def attach_dimensions(records, other_records, q, other_q):
    """Fill ``dim_estimate`` from a census of the same group over another field."""
    sizes = {r.fingerprint: r.size for r in other_records}
    out = []
    for record in records:
        other = sizes.get(record.fingerprint)
        dim = estimate_dimension(record.size, q, other, other_q) if other else None
        out.append(record._replace(dim_estimate=dim))
    return out


def conjugation_orbit_keys(field, x, generators):
    """Keys of the orbit of ``x`` under conjugation, by breadth-first search."""
    shape = x.shape
    gens = batch.to_array(generators)
    invs = batch.to_array([g.inverse() for g in generators])
    frontier = batch.to_array([x])
    seen = np.unique(batch.encode(field, frontier))
    while len(frontier):
        images = batch.matmul(
            field, batch.matmul(field, gens[None], frontier[:, None]), invs[None]
        ).reshape((-1,) + shape)
        keys, index = np.unique(batch.encode(field, images), return_index=True)
        fresh = ~np.isin(keys, seen, assume_unique=True)
        frontier = images[index[fresh]]
        seen = np.union1d(seen, keys[fresh])
    return seen


FamilyReport = collections.namedtuple(
    "FamilyReport", ["q", "members", "regular", "orbits", "in_g_theta"]
)


def x_xi_family_report(n, field):
    """
    Count the ``G^θ`` orbits met by ``x(xi)`` for ``xi`` in ``F_q^*``.

    :return: :class:`FamilyReport`
    """
    ctx = geometry.get_context(2 * n + 1, field)
    family = [x_xi_family(n, gf2k.FieldElem(field, bits)) for bits in field.nonzero()]
    keys = batch.encode(field, batch.to_array(family))
    generators = geometry.sp_generators(ctx)
    remaining = set(range(len(family)))
    orbits = 0
    while remaining:
        start = min(remaining)
        orbit = conjugation_orbit_keys(field, family[start], generators)
        hit = {i for i in remaining if batch.lookup(orbit, keys[[i]])[0] >= 0}
        remaining -= hit
        orbits += 1
    regular = all(linalg.jordan_type(x) == Partition([ctx.N]) for x in family)
    in_g_theta = all(geometry.membership(x, ctx, "g_theta_lie") for x in family)
    return FamilyReport(field.order, len(family), regular, orbits, in_g_theta)
