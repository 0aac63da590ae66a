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
"""Isotropic flags, Springer fibers and stratum representatives Module."""

import collections
import itertools

import sympy

from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import orbits
from springer_lab import util
from springer_lab.linalg import Mat
from springer_lab.linalg import Partition
from springer_lab.linalg import Subspace

LOG = logger.get_logger(__name__)

VARIANTS = ("full", "restricted", "semisimple_b")
DEFAULT_MAX_FLAG_COUNT = 10 ** 7
DEFAULT_MAX_SUBSPACE_COUNT = 10 ** 6
DEFAULT_RETRY_CAP = 16


def flag_count(n, q):
    """
    Number of complete isotropic flags in a symplectic space of dimension 2n.

    Equals ``|Sp_2n(F_q)| / |B(F_q)|``.

    >>> flag_count(2, 2)
    45
    """
    count = 1
    for i in range(1, n + 1):
        count *= (q ** (2 * i) - 1) // (q - 1)
    return count


def borel_order(n, q):
    return q ** (n * n) * (q - 1) ** n


def projective_points(field, vectors):
    """
    Yield one representative per line of the span of ``vectors``.

    Coefficients are normalized so the first nonzero one is 1.
    """
    d = len(vectors)
    mul = field.mul
    for lead in range(d):
        for tail in itertools.product(range(field.order), repeat=d - lead - 1):
            out = list(vectors[lead])
            for c, vec in zip(tail, vectors[lead + 1 :]):
                if c:
                    out = [a ^ mul(c, b) for a, b in zip(out, vec)]
            yield tuple(out)


def _check_z(z, ctx, nilpotent=True):
    x, v = z
    if not geometry.membership(x, ctx, "sp_lie"):
        raise orbits.PreconditionError("x is not in sp")
    if nilpotent and not x.is_nilpotent():
        raise linalg.NilpotencyError("x is not nilpotent", detail=x.to_json())
    if v is not None and len(v) != ctx.N:
        raise linalg.ShapeError("v has the wrong length")


def springer_fiber_count(z, m1, ctx, variant="full", limit=DEFAULT_MAX_FLAG_COUNT):
    """
    Count complete isotropic flags ``F_1 < .. < F_n`` compatible with ``z``.

    For ``full`` and ``restricted`` the flag must satisfy
    ``x F_i <= F_(i-1)``; for a self-adjoint ``x`` this already forces
    ``x`` into the nilradical of the flag's Borel subalgebra, since
    ``x F_i^perp <= F_(i-1)^perp``. ``full`` asks ``v`` in ``F_n``,
    ``restricted`` asks ``v`` in ``F_m1``. ``semisimple_b`` only asks
    ``x F_i <= F_i``.

    :param z: A pair ``(x, v)``; ``v`` is ignored for ``semisimple_b``.
    :param m1: Index of the subspace holding ``v`` for ``restricted``.
    :param ctx: An even :class:`FormContext`.
    :param variant: One of :data:`VARIANTS`.
    :param limit: Resource guard on the total flag count; None disables it.
    :return: int
    """
    if variant not in VARIANTS:
        raise geometry.ParameterRangeError(
            "Unknown fiber variant '{}'".format(variant),
            detail={"allowed": list(VARIANTS)},
        )
    if ctx.is_odd:
        raise geometry.ParameterRangeError("Fibers are counted in an even context")
    x, v = z
    _check_z(z, ctx, nilpotent=variant != "semisimple_b")
    n, field = ctx.n, ctx.field
    if variant == "restricted" and not 0 <= m1 <= n:
        raise geometry.ParameterRangeError("m1 must lie in 0..n", detail={"m1": m1})
    total = flag_count(n, field.order)
    if limit is not None and total > limit:
        raise gf2k.ResourceLimitError(
            "{} flags exceed the limit {}".format(total, limit),
            detail={"flag_count": total, "limit": limit},
        )
    v = tuple(v) if v is not None else (0,) * ctx.N
    zero_v = linalg.vec_is_zero(v)

    def count(flag, i):
        checks_v = variant != "semisimple_b" and not zero_v
        if checks_v and variant == "restricted" and i - 1 == m1:
            if not flag.contains(v):
                return 0
        if i > n:
            return 0 if checks_v and not flag.contains(v) else 1
        perp = flag.perp(ctx.J)
        if checks_v and not perp.contains(v):
            return 0
        found = 0
        for u in projective_points(field, flag.complement_vectors(perp.basis)):
            bigger = flag.with_vector(u)
            if variant == "semisimple_b":
                if not bigger.contains(x.apply(u)):
                    continue
            elif not flag.contains(x.apply(u)):
                continue
            found += count(bigger, i + 1)
        return found

    start = Subspace.zero(field, ctx.N)
    found = count(start, 1)
    LOG.debug("Fiber %s over %s: %d flags", variant, field.name, found)
    return found


class PointCountSeries(object):
    """Point counts at increasing field sizes."""

    def __init__(self, points=()):
        """Construct PointCountSeries."""
        self.points = []
        for q, count in points:
            self.append(q, count)

    def append(self, q, count):
        if q < 2 or q & (q - 1):
            raise geometry.ParameterRangeError(
                "{} is not a power of 2".format(q), detail={"q": q}
            )
        if self.points and q <= self.points[-1][0]:
            raise geometry.ParameterRangeError("Field sizes must ascend")
        if count < 0:
            raise geometry.ParameterRangeError("Counts are non-negative")
        self.points.append((int(q), int(count)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json(self):
        return [{"q": q, "count": count} for q, count in self.points]


class PolynomialFit(object):
    """Outcome of fitting a polynomial in ``q`` to a point-count series."""

    def __init__(self, requested, poly, mismatches):
        """Construct PolynomialFit."""
        self.requested = requested
        self.poly = poly
        self.mismatches = mismatches

    @property
    def fitted(self):
        return not self.mismatches

    @property
    def degree(self):
        if self.poly.is_zero:
            return None
        return int(self.poly.degree())

    @property
    def leading(self):
        return self.poly.LC()

    @property
    def coefficients(self):
        """Coefficients from the constant term upward."""
        return list(reversed(self.poly.all_coeffs()))

    def __str__(self):
        return str(self.poly.as_expr())

    def to_json(self):
        return {
            "requested_degree": self.requested,
            "degree": self.degree,
            "coefficients": [_number(c) for c in self.coefficients],
            "leading": _number(self.leading),
            "polynomial": str(self),
            "fitted": self.fitted,
            "mismatches": [{"q": q, "count": c} for q, c in self.mismatches],
        }


def _number(value):
    value = sympy.Rational(value)
    return int(value) if value.q == 1 else str(value)


Q = sympy.Symbol("q")


def fit_point_polynomial(series, degree):
    """
    Interpolate the first ``degree + 1`` points exactly and test the rest.

    >>> fit_point_polynomial(PointCountSeries([(2, 3), (4, 5), (8, 9)]), 1).coefficients
    [1, 1]

    :param series: :class:`PointCountSeries` or a list of ``(q, count)``.
    :param degree: Degree of the interpolating polynomial.
    :return: :class:`PolynomialFit`; a fit failure is reported, not raised
    """
    points = list(series)
    if degree < 0 or len(points) < degree + 1:
        raise orbits.PreconditionError(
            "Fitting degree {} needs {} points, got {}".format(
                degree, degree + 1, len(points)
            )
        )
    used = [(sympy.Integer(q), sympy.Integer(c)) for q, c in points[: degree + 1]]
    expr = sympy.interpolate(used, Q) if len(used) > 1 else used[0][1]
    poly = sympy.Poly(expr, Q, domain="QQ")
    mismatches = [
        (q, c) for q, c in points[degree + 1 :] if poly.eval(sympy.Integer(q)) != c
    ]
    return PolynomialFit(degree, poly, mismatches)


def count_series(z, m1, ctx, variant, q_values, limit=DEFAULT_MAX_FLAG_COUNT):
    """Fiber counts of a 0/1 point ``z`` at every field size in ``q_values``."""
    x, v = z
    series = PointCountSeries()
    for q in q_values:
        field = gf2k.field_by_size(q)
        lifted_ctx = geometry.get_context(ctx.N, field)
        lifted = lift_pair((x, v), field)
        series.append(q, springer_fiber_count(lifted, m1, lifted_ctx, variant, limit))
    return series


def lift(x, field):
    """Read a matrix with 0/1 entries over another field."""
    if any(e > 1 for row in x.data for e in row):
        raise gf2k.FieldMismatchError("Only 0/1 matrices can change field")
    return Mat(field, x.data, x.rows, x.cols)


def lift_pair(z, field):
    x, v = z
    return lift(x, field), tuple(v)


def isotropic_subspaces(
    ctx, dim, containing=None, stable=None, limit=DEFAULT_MAX_SUBSPACE_COUNT
):
    """
    Isotropic subspaces of dimension ``dim``, optionally through a vector
    and stable under a matrix, deduplicated by their RREF key.

    :return: list of :class:`Subspace` sorted by key
    """
    if not 0 <= dim <= ctx.n:
        raise geometry.ParameterRangeError("Isotropic dimension out of range")
    field = ctx.field
    level = {}
    start = Subspace.zero(field, ctx.N)
    if containing is not None and not linalg.vec_is_zero(containing):
        if dim == 0:
            return []
        start = start.with_vector(containing)
    level[start.key] = start
    seen = len(level)
    while level and next(iter(level.values())).dim < dim:
        bigger = {}
        for space in level.values():
            perp = space.perp(ctx.J)
            for u in projective_points(field, space.complement_vectors(perp.basis)):
                candidate = space.with_vector(u)
                bigger.setdefault(candidate.key, candidate)
        seen += len(bigger)
        if limit is not None and seen > limit:
            raise gf2k.ResourceLimitError(
                "Subspace enumeration exceeded {}".format(limit),
                detail={"limit": limit},
            )
        level = bigger
    found = [s for s in level.values() if stable is None or s.is_stable(stable)]
    return sorted(found, key=lambda s: s.key)


def lagrangians(ctx, x, v=None, limit=DEFAULT_MAX_SUBSPACE_COUNT):
    """x-stable Lagrangian subspaces containing ``v``."""
    return isotropic_subspaces(ctx, ctx.n, containing=v, stable=x, limit=limit)


def subspace_labels(x, v, W, ctx):
    """
    Labels of an x-stable isotropic ``W`` through ``v``.

    :return: (:class:`PairLabel` of ``(x|W, v)``, fingerprint on ``W^perp/W``)
    """
    x_on_w = linalg.restrict(x, W)
    if W.dim:
        pair = orbits.ah_pair_label(x_on_w, W.coordinates(v))
    else:
        pair = orbits.PairLabel(Partition(), Partition())
    induced, gram = linalg.induced_form_and_map(x, ctx.J, W)
    return pair, orbits.fingerprint_with_gram(induced, gram)


def stabilizing_subspace_count(
    z, m1, ctx, lambda1=None, fingerprint=None, limit=DEFAULT_MAX_SUBSPACE_COUNT
):
    """
    Count isotropic ``W`` of dimension ``m1`` with ``x W <= W`` and ``v`` in ``W``.

    When ``lambda1`` and ``fingerprint`` are given, ``(x|W, v)`` must have the
    pair label ``(lambda1, ())`` and ``x`` on ``W^perp/W`` the fingerprint.
    """
    x, v = z
    _check_z(z, ctx)
    count = 0
    for W in isotropic_subspaces(ctx, m1, containing=v, stable=x, limit=limit):
        if lambda1 is not None or fingerprint is not None:
            pair, sp_part = subspace_labels(x, v, W, ctx)
            if lambda1 is not None and pair != (Partition(lambda1), Partition()):
                continue
            if fingerprint is not None and sp_part != fingerprint:
                continue
        count += 1
    return count


@util.lru_cache(maxsize=None)
def canonical_sp_representatives(n):
    """
    Map fingerprints of nilpotent ``sp_2n`` orbits to 0/1 representatives.

    The representative is the orbit element of least key over ``F_2``.
    """
    field = gf2k.get_field(1)
    if n == 0:
        empty = Mat.zeros(field, 0, 0)
        return {orbits.fingerprint_with_gram(empty, empty): empty}
    ctx = geometry.get_context(2 * n, field)
    census = orbits.sp_nilpotent_census(ctx)
    out = {}
    for root in census.roots:
        x = orbits.census_matrix(census, root)
        out[orbits.sp_nilpotent_fingerprint(x, ctx)] = x
    return out


def jordan_block_pair(field, lam):
    """Nilpotent ``x`` of Jordan type ``lam`` and ``v`` the sum of block tops."""
    lam = Partition(lam)
    size = lam.n
    data = [[0] * size for _ in range(size)]
    v = [0] * size
    start = 0
    for part in lam:
        for i in range(start + 1, start + part):
            data[i - 1][i] = 1
        v[start + part - 1] = 1
        start += part
    return Mat(field, data, size, size), tuple(v)


def parabolic_nilradical(ctx, m1):
    """
    The nilradical of the parabolic fixing ``M = M_m1`` inside ``sp``.

    Its elements kill ``M``, send ``M^perp`` into ``M`` and ``V`` into
    ``M^perp``.
    """
    n = ctx.n
    low = [ctx.e(i) for i in range(1, m1 + 1)]
    top = [ctx.f(i) for i in range(1, m1 + 1)]
    perp = [ctx.e(i) for i in range(1, n + 1)] + [
        ctx.f(i) for i in range(m1 + 1, n + 1)
    ]
    outside_m = [j for j in range(ctx.N) if j not in low]
    J = ctx.J
    constraints = [
        lambda y: y.transpose() * J + J * y,
        lambda y: [y.data[r][c] for r in range(ctx.N) for c in low],
        lambda y: [y.data[r][c] for r in outside_m for c in perp],
        lambda y: [y.data[r][c] for r in top for c in range(ctx.N)],
    ]
    return linalg.solve_linear_subspace(ctx.field, (ctx.N, ctx.N), constraints)


def _levi_part(multipartition, table):
    lambda1, lambda2, lambda3 = multipartition
    m1 = lambda1.n
    n_prime = lambda2.n + lambda3.n
    n = m1 + n_prime
    field = gf2k.get_field(1)
    ctx = geometry.get_context(2 * n, field)
    entry = table.entry_for(n_prime, (lambda2, lambda3))
    if entry is None:
        raise orbits.PreconditionError(
            "No rendered orbit for ({}, {})".format(lambda2, lambda3)
        )
    x2 = canonical_sp_representatives(n_prime)[entry.fingerprint]
    x1, v1 = jordan_block_pair(field, lambda1)
    data = [[0] * ctx.N for _ in range(ctx.N)]
    for i in range(m1):
        for j in range(m1):
            data[ctx.e(i + 1)][ctx.e(j + 1)] = x1.data[i][j]
            data[ctx.f(j + 1)][ctx.f(i + 1)] = x1.data[i][j]
    middle = [ctx.e(i) for i in range(m1 + 1, n + 1)] + [
        ctx.f(i) for i in range(m1 + 1, n + 1)
    ]
    for a, row in enumerate(middle):
        for b, col in enumerate(middle):
            data[row][col] = x2.data[a][b]
    v = [0] * ctx.N
    for i in range(m1):
        v[ctx.e(i + 1)] = v1[i]
    return ctx, Mat(field, data), tuple(v), entry.fingerprint


StratumSample = collections.namedtuple(
    "StratumSample",
    [
        "multipartition",
        "x",
        "v",
        "lagrangian",
        "attempts",
        "stabilizing_count",
        "accepted",
    ],
)


def stratum_representative(
    multipartition, rng, retry_cap=DEFAULT_RETRY_CAP, table=None
):
    """
    Sample a 0/1 point of the stratum labelled by a 3-multipartition.

    The Levi part is a block of Jordan blocks on ``M_m1`` with ``v`` the sum
    of their tops, its adjoint on the dual block, and the least-key orbit
    representative on ``M_m1^perp / M_m1``. Random 0/1 fillers from the
    nilradical are added until exactly one isotropic ``W`` of dimension
    ``m1`` carries the parabolic labels and some x-stable Lagrangian
    through ``v`` carries the target label, or ``retry_cap`` draws are used.

    :return: :class:`StratumSample` over ``F_2``
    """
    table = orbits.rendering_table() if table is None else table
    multipartition = tuple(Partition(p) for p in multipartition)
    lambda1 = multipartition[0]
    ctx, base, v, fingerprint = _levi_part(multipartition, table)
    m1 = lambda1.n
    filler = parabolic_nilradical(ctx, m1).matrices()
    sample = None
    for attempt in range(1, retry_cap + 1):
        x = base
        for y, c in zip(filler, rng.integers(0, 2, size=len(filler))):
            if c:
                x = x + y
        count = stabilizing_subspace_count((x, v), m1, ctx, lambda1, fingerprint)
        matching = None
        if count == 1:
            for M in lagrangians(ctx, x, v):
                label = orbits.stratum_label(x, v, M, ctx, table)
                if label.multipartition == multipartition:
                    matching = M
                    break
        generic = matching is not None
        sample = StratumSample(multipartition, x, v, matching, attempt, count, generic)
        if generic:
            return sample
    LOG.warning(
        "No generic point found for %s after %d draws",
        [str(p) for p in multipartition],
        retry_cap,
    )
    return sample


def subregular_torus_element(ctx, values=None):
    """
    Element of ``t`` with pairwise distinct values on the ``n`` eigenspaces.

    Defaults to the first ``n`` field elements in bitmask order.
    """
    n, field = ctx.n, ctx.field
    if values is None:
        if n > field.order:
            raise geometry.ParameterRangeError(
                "{} has fewer than {} elements".format(field.name, n)
            )
        values = list(range(n))
    s = geometry.torus_element(ctx, values)
    if not geometry.is_subregular(s, ctx):
        raise geometry.NotSplitSemisimpleError("Values are not pairwise distinct")
    return s


def semisimple_fiber_count(
    ctx, k=0, values=None, d_values=None, limit=DEFAULT_MAX_FLAG_COUNT
):
    """
    Borel fiber of ``s + d`` with ``s`` subregular and ``d`` in ``D_k`` with
    all ``k`` entries nonzero; expected ``n! (q + 1)^(n - k)``.
    """
    n, field = ctx.n, ctx.field
    if not 0 <= k <= n:
        raise geometry.ParameterRangeError("k must lie in 0..n", detail={"k": k})
    x = subregular_torus_element(ctx, values)
    d_values = [1] * k if d_values is None else list(d_values)
    if len(d_values) != k or any(not d for d in d_values):
        raise geometry.ParameterRangeError("D_k entries must be k nonzero values")
    for i, d in enumerate(d_values, 1):
        x = x + Mat.unit(field, ctx.N, ctx.N, ctx.e(i), ctx.f(i), d)
    return springer_fiber_count((x, None), 0, ctx, "semisimple_b", limit)


def expected_semisimple_count(n, q, k=0):
    """
    >>> expected_semisimple_count(2, 2)
    18
    """
    count = 1
    for i in range(2, n + 1):
        count *= i
    return count * (q + 1) ** (n - k)


def fit_lowest_degree(series):
    """
    Fit the least degree that a spare point confirms.

    :return: ``(PolynomialFit, verified)``; when no degree below
        ``len(series) - 1`` fits, the exact interpolant is returned unverified
    """
    points = list(series)
    for degree in range(len(points) - 1):
        fit = fit_point_polynomial(points, degree)
        if fit.fitted:
            return fit, True
    return fit_point_polynomial(points, len(points) - 1), False
