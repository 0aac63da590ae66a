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
"""Forms, involutions, classical groups and standard subalgebras Module."""

import collections
import itertools

import numpy as np

from springer_lab import batch
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import util
from springer_lab.linalg import Mat

LOG = logger.get_logger(__name__)

DEFAULT_MAX_GROUP_ORDER = 10 ** 7
# predicate scans are used when q^(N*N) stays below this
SCAN_LIMIT = 1 << 16

GROUPS = ("Sp", "O", "G_theta", "G_iota_theta", "sp_lie", "g_theta_lie")
SUBALGEBRAS = (
    "t",
    "t_sr_predicate",
    "b",
    "n",
    "n_s",
    "D",
    "D_k",
    "N_k",
    "M_i",
    "g_V",
    "z",
)


class NotInGThetaError(util.SpringerLabError):
    """The matrix does not satisfy the fixed-point Lie algebra predicate."""

    code = "not_in_g_theta"


class ParameterRangeError(util.SpringerLabError):
    """A structural parameter is out of range."""

    code = "parameter_range"


class NotSplitSemisimpleError(util.SpringerLabError):
    """The element is not semisimple with eigenvalues in the base field."""

    code = "not_split_semisimple"


class NotSemisimpleError(NotSplitSemisimpleError):
    """The minimal polynomial of the element has repeated roots."""

    code = "not_semisimple"


class GroupOrderError(util.SpringerLabError):
    """An enumerated group disagrees with the order formula."""

    code = "group_order_mismatch"
    exit_code = util.EXIT_FAIL


class FormContext(object):
    """
    The ambient space of dimension ``N`` with its forms.

    The basis is ordered ``e_0`` (only when ``N`` is odd), ``e_1 .. e_n``,
    ``f_1 .. f_n``. ``J`` pairs ``e_i`` with ``f_i`` and fixes ``e_0``, and
    the quadratic form is ``Q(v) = x_0^2 + sum x_i y_i``. For even ``N`` the
    bilinear form ``<v, w> = ᵗv J w`` is alternating.
    """

    def __init__(self, N, field):
        """
        Initialize a new context and returns None.

        :param N: Ambient dimension, at least 1.
        :param field: The :class:`springer_lab.gf2k.Field`.
        :returns: None
        """
        if N < 1:
            raise ParameterRangeError("Dimension must be positive", detail={"N": N})
        self.N = N
        self.n = N // 2
        self.parity = "odd" if N % 2 else "even"
        self.field = field
        self.offset = 1 if self.parity == "odd" else 0
        data = [[0] * N for _ in range(N)]
        if self.offset:
            data[0][0] = 1
        for i in range(1, self.n + 1):
            data[self.e(i)][self.f(i)] = 1
            data[self.f(i)][self.e(i)] = 1
        self.J = Mat(field, data)

    def __repr__(self):
        return "FormContext(N={}, {})".format(self.N, self.field.name)

    @property
    def is_odd(self):
        return self.parity == "odd"

    def e(self, i):
        """Index of ``e_i``; ``e_0`` exists only for odd ``N``."""
        if i == 0:
            if not self.is_odd:
                raise ParameterRangeError("e_0 exists only for odd N")
            return 0
        return self.offset + i - 1

    def f(self, i):
        return self.offset + self.n + i - 1

    @property
    def labels(self):
        names = ["e0"] if self.is_odd else []
        names += ["e{}".format(i) for i in range(1, self.n + 1)]
        names += ["f{}".format(i) for i in range(1, self.n + 1)]
        return names

    def vector(self, **coefficients):
        v = [0] * self.N
        for label, value in coefficients.items():
            v[self.labels.index(label)] = int(value)
        return tuple(v)

    def form(self, u, v):
        return linalg.bilinear(self.field, self.J, u, v)

    def quadratic(self, v):
        mul = self.field.mul
        acc = mul(v[0], v[0]) if self.is_odd else 0
        for i in range(1, self.n + 1):
            acc ^= mul(v[self.e(i)], v[self.f(i)])
        return acc

    def symplectic_context(self):
        """The even context on ``V = span(e_i, f_i)``."""
        return get_context(2 * self.n, self.field)

    def to_json(self):
        return {"N": self.N, "field": self.field.name}

    @classmethod
    def from_json(cls, doc):
        return get_context(doc["N"], gf2k.parse_field_name(doc["field"]))


@util.lru_cache(maxsize=None)
def get_context(N, field):
    return FormContext(N, field)


def _check_shape(x, ctx):
    if x.shape != (ctx.N, ctx.N):
        raise linalg.ShapeError(
            "Expected a {0}x{0} matrix, got {1}".format(ctx.N, x.shape)
        )


def theta(g, ctx, level="group"):
    """
    Apply the involution at group or Lie level.

    ``J ᵗ(g^-1) J`` at group level, ``J ᵗx J`` at Lie level.
    """
    _check_shape(g, ctx)
    J = ctx.J
    if level == "group":
        return J * g.inverse().transpose() * J
    if level == "lie":
        return J * g.transpose() * J
    raise ParameterRangeError("Unknown level '{}'".format(level))


def _is_symmetric(m):
    return m == m.transpose()


def membership(x, ctx, which):
    """
    Test membership in one of the groups or Lie algebras.

    :param x: A square :class:`Mat` of size ``N``.
    :param ctx: The :class:`FormContext`.
    :param which: One of ``Sp``, ``O``, ``G_theta``, ``G_iota_theta``,
     ``sp_lie``, ``g_theta_lie``.
    :return: bool
    """
    _check_shape(x, ctx)
    J = ctx.J
    if which in ("Sp", "G_theta"):
        return x.transpose() * J * x == J
    if which == "O":
        if x.transpose() * J * x != J:
            return False
        return all(
            ctx.quadratic(x.column(i))
            == ctx.quadratic(linalg.standard_vector(ctx.N, i))
            for i in range(ctx.N)
        )
    if which == "G_iota_theta":
        return _is_symmetric(J * x) and x.is_invertible()
    if which == "sp_lie":
        return (x.transpose() * J + J * x).is_zero()
    if which == "g_theta_lie":
        return _is_symmetric(J * x)
    raise ParameterRangeError(
        "Unknown group '{}'".format(which), detail={"allowed": list(GROUPS)}
    )


def lie_algebra(ctx, which="g_theta_lie"):
    """Basis of ``sp`` or of the fixed-point Lie algebra as a matrix subspace."""
    J = ctx.J
    if which == "g_theta_lie":
        constraint = lambda x: J * x + (J * x).transpose()  # noqa: E731
    elif which == "sp_lie":
        constraint = lambda x: x.transpose() * J + J * x  # noqa: E731
    else:
        raise ParameterRangeError("Unknown Lie algebra '{}'".format(which))
    return linalg.solve_linear_subspace(ctx.field, (ctx.N, ctx.N), [constraint])


GThetaParts = collections.namedtuple("GThetaParts", ["h_part", "v_part", "z_part"])


def decompose_g_theta(x, ctx):
    """
    Split an element of the odd fixed-point Lie algebra into ``h``, ``V``
    and scalar parts.

    The ``V`` part is the first column below the corner entry, in the
    ``e_1 .. e_n, f_1 .. f_n`` coordinates; the ``h`` part is the lower
    right block and lies in ``sp(V)``.
    """
    if not ctx.is_odd:
        raise ParameterRangeError("Decomposition needs an odd context")
    if not membership(x, ctx, "g_theta_lie"):
        raise NotInGThetaError("Matrix is not in the fixed-point Lie algebra")
    rest = list(range(1, ctx.N))
    h_part = x.submatrix(rest, rest)
    v_part = tuple(x.data[i][0] for i in rest)
    return GThetaParts(h_part, v_part, gf2k.FieldElem(ctx.field, x.data[0][0]))


def assemble_g_theta(h_part, v_part, z_part, ctx):
    """Inverse of :func:`decompose_g_theta`."""
    n = ctx.n
    data = [[0] * ctx.N for _ in range(ctx.N)]
    data[0][0] = int(z_part)
    for i in range(2 * n):
        data[i + 1][0] = int(v_part[i])
        for j in range(2 * n):
            data[i + 1][j + 1] = h_part.data[i][j]
    # row 0 mirrors column 0 through J: e-coefficients land on f-columns
    for i in range(1, n + 1):
        data[0][ctx.f(i)] = int(v_part[i - 1])
        data[0][ctx.e(i)] = int(v_part[n + i - 1])
    return Mat(ctx.field, data)


def embed(y, ctx):
    """Embed a group element acting on ``V`` as ``diag(1, y)``."""
    if not ctx.is_odd:
        return y
    return Mat.block_diag(ctx.field, Mat.identity(ctx.field, 1), y)


def embed_lie(y, ctx):
    if not ctx.is_odd:
        return y
    return Mat.block_diag(ctx.field, Mat.zeros(ctx.field, 1), y)


class StandardSubalgebra(object):
    """A named subspace of the Lie algebra, or of ``V`` for ``M_i``."""

    def __init__(self, name, basis, k=None, i=None, predicate=None):
        """Construct StandardSubalgebra."""
        self.name = name
        self.basis = basis
        self.k = k
        self.i = i
        self.predicate = predicate

    @property
    def dim(self):
        return self.basis.dim

    def __contains__(self, x):
        if isinstance(x, Mat):
            return self.basis.contains(x.flatten())
        return self.basis.contains(x)

    def __repr__(self):
        return "StandardSubalgebra({}, dim={})".format(self.name, self.dim)


def _unit_sum(ctx, *entries):
    data = [[0] * ctx.N for _ in range(ctx.N)]
    for i, j in entries:
        data[i][j] ^= 1
    return Mat(ctx.field, data)


def _torus_basis(ctx):
    return [
        _unit_sum(ctx, (ctx.e(i), ctx.e(i)), (ctx.f(i), ctx.f(i)))
        for i in range(1, ctx.n + 1)
    ]


def _ns_basis(ctx):
    n = ctx.n
    basis = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            basis.append(_unit_sum(ctx, (ctx.e(i), ctx.e(j)), (ctx.f(j), ctx.f(i))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            basis.append(_unit_sum(ctx, (ctx.e(i), ctx.f(j)), (ctx.e(j), ctx.f(i))))
    return basis


def _d_basis(ctx, k=None):
    k = ctx.n if k is None else k
    return [_unit_sum(ctx, (ctx.e(i), ctx.f(i))) for i in range(1, k + 1)]


def _matrix_span(ctx, mats):
    return linalg.Subspace.span(
        ctx.field, ctx.N * ctx.N, [m.flatten() for m in mats], shape=(ctx.N, ctx.N)
    )


def coordinate_isotropic(ctx, i):
    """``M_i = span(e_1, .., e_i)`` for ``0 <= i <= n``."""
    return linalg.Subspace.span(
        ctx.field,
        ctx.N,
        [linalg.standard_vector(ctx.N, ctx.e(j)) for j in range(1, i + 1)],
    )


def is_subregular(s, ctx):
    """True when ``s`` lies in ``t`` with pairwise distinct diagonal values."""
    if s not in standard_subalgebra(ctx, "t"):
        return False
    values = [s.data[ctx.e(i)][ctx.e(i)] for i in range(1, ctx.n + 1)]
    return len(set(values)) == len(values)


def standard_subalgebra(ctx, name, k=None, i=None):
    """
    Build one of the standard subalgebras of ``sp(V)`` or ``g^θ``.

    ``t`` is the diagonal torus, ``n`` the nilradical of the standard Borel
    subalgebra ``b = t + n``, ``D`` its diagonal part in the upper right
    block, ``n_s`` its complement in ``n``, ``D_k`` the first ``k``
    elements of ``D`` and ``N_k = t + n_s + D_k``. For odd contexts ``g_V``
    and ``z`` are the vector and scalar parts.
    """
    n = ctx.n
    if name in ("D_k", "N_k"):
        if k is None or not 0 <= k <= n:
            raise ParameterRangeError(
                "{} needs 0 <= k <= {}".format(name, n), detail={"k": k}
            )
    if name == "M_i":
        if i is None or not 1 <= i <= n:
            raise ParameterRangeError(
                "M_i needs 1 <= i <= {}".format(n), detail={"i": i}
            )
        return StandardSubalgebra(name, coordinate_isotropic(ctx, i), i=i)
    if name in ("g_V", "z") and not ctx.is_odd:
        raise ParameterRangeError("{} exists only for odd N".format(name))

    if name == "t":
        mats = _torus_basis(ctx)
    elif name == "t_sr_predicate":
        return StandardSubalgebra(
            name,
            _matrix_span(ctx, _torus_basis(ctx)),
            predicate=lambda s: is_subregular(s, ctx),
        )
    elif name == "n":
        mats = _ns_basis(ctx) + _d_basis(ctx)
    elif name == "n_s":
        mats = _ns_basis(ctx)
    elif name == "b":
        mats = _torus_basis(ctx) + _ns_basis(ctx) + _d_basis(ctx)
    elif name == "D":
        mats = _d_basis(ctx)
    elif name == "D_k":
        mats = _d_basis(ctx, k)
    elif name == "N_k":
        mats = _torus_basis(ctx) + _ns_basis(ctx) + _d_basis(ctx, k)
    elif name == "g_V":
        mats = []
        for j in range(1, n + 1):
            mats.append(_unit_sum(ctx, (ctx.e(j), 0), (0, ctx.f(j))))
            mats.append(_unit_sum(ctx, (ctx.f(j), 0), (0, ctx.e(j))))
    elif name == "z":
        mats = [_unit_sum(ctx, (0, 0))]
    else:
        raise ParameterRangeError(
            "Unknown subalgebra '{}'".format(name),
            detail={"allowed": list(SUBALGEBRAS)},
        )
    return StandardSubalgebra(name, _matrix_span(ctx, mats), k=k, i=i)


def _symplectic_pairs(ctx, vectors):
    """
    Greedy symplectic basis of the span of ``vectors``.

    Pick ``v``, find ``w`` with ``<v, w> != 0``, normalize to 1, then
    project the remaining vectors onto the orthogonal of ``span(v, w)``.
    """
    field = ctx.field
    remaining = [tuple(v) for v in vectors]
    pairs = []
    while remaining:
        v = remaining.pop(0)
        partner = None
        for index, w in enumerate(remaining):
            if ctx.form(v, w):
                partner = index
                break
        if partner is None:
            raise NotSplitSemisimpleError("Eigenspace is degenerate for the form")
        w = remaining.pop(partner)
        w = linalg.vec_scale(field, field.inv(ctx.form(v, w)), w)
        projected = []
        for u in remaining:
            u = linalg.vec_add(u, linalg.vec_scale(field, ctx.form(u, w), v))
            u = linalg.vec_add(u, linalg.vec_scale(field, ctx.form(u, v), w))
            projected.append(u)
        remaining = linalg.Subspace.span(field, ctx.N, projected).vectors
        pairs.append((v, w))
    return pairs


def diagonalize_split_semisimple(x, ctx):
    """
    Return ``g`` in ``Sp`` with ``g^-1 x g`` in ``t``.

    Eigenspaces are found by scanning the base field; distinct eigenspaces
    are orthogonal because ``x`` is self-adjoint, and each receives a
    symplectic basis.

    :param x: A semisimple element of ``sp`` with eigenvalues in the field.
    :param ctx: An even :class:`FormContext`.
    :return: :class:`Mat`
    """
    if ctx.is_odd:
        raise ParameterRangeError("Diagonalization works in an even context")
    if not membership(x, ctx, "sp_lie"):
        raise NotInGThetaError("Element is not in sp")
    field = ctx.field
    identity = Mat.identity(field, ctx.N)
    if x in standard_subalgebra(ctx, "t"):
        return identity
    eigenspaces = []
    for value in range(field.order):
        shifted = x + identity.scale(value)
        kernel = linalg.rref_rank_kernel(shifted)[2]
        if kernel.dim:
            eigenspaces.append((value, kernel))
    total = sum(space.dim for _, space in eigenspaces)
    if total < ctx.N:
        generalized = sum(
            linalg.rref_rank_kernel((x + identity.scale(value)).power(ctx.N))[2].dim
            for value, _ in eigenspaces
        )
        if generalized == ctx.N:
            raise NotSemisimpleError("Element is not semisimple", detail=x.to_json())
        raise NotSplitSemisimpleError(
            "Eigenvalues are not all in {}".format(field.name), detail=x.to_json()
        )
    columns_e, columns_f = [], []
    for _, space in eigenspaces:
        if space.dim % 2:
            raise NotSplitSemisimpleError("Odd-dimensional eigenspace")
        for v, w in _symplectic_pairs(ctx, space.vectors):
            columns_e.append(v)
            columns_f.append(w)
    return Mat.from_columns(field, columns_e + columns_f, ctx.N)


def sp_order(n, q):
    """
    Order of ``Sp_2n(F_q)``.

    >>> sp_order(2, 2)
    720
    """
    order = q ** (n * n)
    for i in range(1, n + 1):
        order *= q ** (2 * i) - 1
    return order


def gl_order(n, q):
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


def sp_generators(ctx):
    """
    Generators of ``Sp(V)``, embedded as ``diag(1, .)`` for odd contexts.

    Signed permutations, one long and one short root element and a torus
    element built on a generator of the multiplicative group.
    """
    sctx = ctx.symplectic_context()
    field, n = ctx.field, ctx.n
    gens = []

    def permutation(mapping):
        data = [[0] * sctx.N for _ in range(sctx.N)]
        for src, dst in mapping.items():
            data[dst][src] = 1
        return Mat(field, data)

    for i in range(1, n):
        mapping = {j: j for j in range(sctx.N)}
        mapping[sctx.e(i)], mapping[sctx.e(i + 1)] = sctx.e(i + 1), sctx.e(i)
        mapping[sctx.f(i)], mapping[sctx.f(i + 1)] = sctx.f(i + 1), sctx.f(i)
        gens.append(permutation(mapping))
    mapping = {j: j for j in range(sctx.N)}
    mapping[sctx.e(1)], mapping[sctx.f(1)] = sctx.f(1), sctx.e(1)
    gens.append(permutation(mapping))
    identity = Mat.identity(field, sctx.N)
    gens.append(identity + Mat.unit(field, sctx.N, sctx.N, sctx.e(1), sctx.f(1)))
    if n >= 2:
        gens.append(
            identity
            + Mat.unit(field, sctx.N, sctx.N, sctx.e(1), sctx.e(2))
            + Mat.unit(field, sctx.N, sctx.N, sctx.f(2), sctx.f(1))
        )
    if field.order > 2:
        c = field.generator_bits
        values = [1] * sctx.N
        values[sctx.e(1)] = c
        values[sctx.f(1)] = field.inv(c)
        gens.append(Mat.diagonal(field, values))
    return [embed(g, ctx) for g in gens]


def gl_generators(field, n):
    """Generators of ``GL_n``: a transposition, an n-cycle, a transvection, a torus."""
    gens = []
    identity = Mat.identity(field, n)
    if n >= 2:
        swap = [[0] * n for _ in range(n)]
        cycle = [[0] * n for _ in range(n)]
        for j in range(n):
            swap[j][j] = 1
            cycle[(j + 1) % n][j] = 1
        swap[0][0] = swap[1][1] = 0
        swap[0][1] = swap[1][0] = 1
        gens.append(Mat(field, swap))
        if n > 2:
            gens.append(Mat(field, cycle))
        gens.append(identity + Mat.unit(field, n, n, 0, 1))
    if field.order > 2:
        values = [1] * n
        values[0] = field.generator_bits
        gens.append(Mat.diagonal(field, values))
    if not gens:
        gens.append(identity)
    return gens


class GroupTable(object):
    """
    A finite matrix group given by generators, optionally fully enumerated.

    Elements are stored as sorted packed keys (see :mod:`springer_lab.batch`)
    and decoded on demand.
    """

    def __init__(self, context, which, generators, claimed_order, keys=None):
        """Construct GroupTable."""
        self.context = context
        self.field = context.field
        self.which = which
        self.generators = generators
        self.claimed_order = claimed_order
        self.keys = keys

    @property
    def enumerated(self):
        return self.keys is not None

    def __len__(self):
        if not self.enumerated:
            raise gf2k.ResourceLimitError("Group is not enumerated")
        return len(self.keys)

    @property
    def order_matches(self):
        return self.enumerated and len(self.keys) == self.claimed_order

    @property
    def elements(self):
        if not self.enumerated:
            raise gf2k.ResourceLimitError("Group is not enumerated")
        shape = (self.context.N, self.context.N)
        arrays = batch.decode(self.field, self.keys, shape)
        return [batch.to_mat(self.field, a) for a in arrays]

    def __iter__(self):
        return iter(self.elements)

    def contains(self, g):
        key = batch.encode(self.field, batch.to_array([g]))
        return bool(batch.lookup(self.keys, key)[0] >= 0)

    def to_json(self):
        return {
            "context": self.context.to_json(),
            "which": self.which,
            "claimed_order": self.claimed_order,
            "elements": [g.to_json()["rows"] for g in self.elements],
        }


def _predicate_scan(ctx):
    field = ctx.field
    J = batch.to_array([ctx.J])[0]
    found = []
    for chunk in batch.all_matrices(field, ctx.N):
        form = batch.matmul(
            field, chunk.transpose(0, 2, 1), batch.matmul(field, J[None], chunk)
        )
        mask = (form == J[None]).all(axis=(1, 2))
        found.append(batch.encode(field, chunk[mask]))
    return np.sort(np.concatenate(found))


def group_enumerate(ctx, which="Sp", max_order=DEFAULT_MAX_GROUP_ORDER, scan=None):
    """
    Enumerate ``Sp(V)`` or ``G^θ`` over the context's field.

    Small cases scan every matrix against the defining predicate, larger
    ones close the generator set under multiplication. The size is compared
    with ``|Sp_2n(F_q)|`` and a mismatch raises :class:`GroupOrderError`.

    :param ctx: The :class:`FormContext`.
    :param which: ``Sp`` or ``G_theta``.
    :param max_order: Resource guard on the predicted order; ``None`` disables it.
    :param scan: Force (True) or forbid (False) the predicate scan.
    :return: :class:`GroupTable`
    """
    if which not in ("Sp", "G_theta"):
        raise ParameterRangeError("Only Sp and G_theta can be enumerated")
    if which == "Sp" and ctx.is_odd:
        raise ParameterRangeError("Sp needs an even context; use G_theta")
    field = ctx.field
    claimed = sp_order(ctx.n, field.order)
    if max_order is not None and claimed > max_order:
        raise gf2k.ResourceLimitError(
            "Predicted order {} exceeds the limit {}".format(claimed, max_order),
            detail={"claimed_order": claimed, "max_order": max_order},
        )
    generators = sp_generators(ctx)
    if scan is None:
        scan = field.order ** (ctx.N * ctx.N) <= SCAN_LIMIT
    if scan:
        keys = _predicate_scan(ctx)
    else:
        keys = batch.closure(field, batch.to_array(generators), max_order)
    table = GroupTable(ctx, which, generators, claimed, keys)
    if not table.order_matches:
        raise GroupOrderError(
            "Enumerated {} elements of {} over {}, expected {}".format(
                len(keys), which, field.name, claimed
            ),
            detail={"enumerated": len(keys), "claimed_order": claimed},
        )
    LOG.debug("Enumerated %d elements of %s over %s", len(keys), which, field.name)
    return table


def has_block_shape(g, ctx):
    """True when ``g = diag(1, y)`` in the ``e_0`` / ``V`` splitting."""
    if not ctx.is_odd:
        return True
    return g.data[0][0] == 1 and not any(g.data[0][1:]) and not any(
        g.data[i][0] for i in range(1, ctx.N)
    )


def borel_element(ctx, upper, symmetric):
    """
    Assemble ``[[A, A S], [0, ᵗA^-1]]`` from an upper triangular ``A`` and a
    symmetric ``S``.
    """
    inverse_t = upper.inverse().transpose()
    top = upper * symmetric
    n = ctx.n
    data = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            data[i][j] = upper.data[i][j]
            data[i][n + j] = top.data[i][j]
            data[n + i][n + j] = inverse_t.data[i][j]
    return Mat(ctx.field, data)


def _upper_positions(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _symmetric_positions(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def borel_elements(ctx):
    """All elements of the standard Borel subgroup ``B(F_q)``."""
    if ctx.is_odd:
        raise ParameterRangeError("Borel elements need an even context")
    field, n = ctx.field, ctx.n
    upper_positions = _upper_positions(n)
    sym_positions = _symmetric_positions(n)
    elements = []
    for diag in itertools.product(range(1, field.order), repeat=n):
        for strict in itertools.product(
            range(field.order), repeat=len(upper_positions)
        ):
            a = [[0] * n for _ in range(n)]
            for i in range(n):
                a[i][i] = diag[i]
            for (i, j), value in zip(upper_positions, strict):
                a[i][j] = value
            upper = Mat(field, a)
            for sym in itertools.product(range(field.order), repeat=len(sym_positions)):
                s = [[0] * n for _ in range(n)]
                for (i, j), value in zip(sym_positions, sym):
                    s[i][j] = s[j][i] = value
                elements.append(borel_element(ctx, upper, Mat(field, s)))
    return elements


def random_borel_element(ctx, rng):
    field, n = ctx.field, ctx.n
    a = [[0] * n for _ in range(n)]
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = int(field.random_nonzero(rng))
    for i, j in _upper_positions(n):
        a[i][j] = int(field.random(rng))
    for i, j in _symmetric_positions(n):
        s[i][j] = s[j][i] = int(field.random(rng))
    return borel_element(ctx, Mat(field, a), Mat(field, s))


def torus_element(ctx, values):
    values = list(values)
    return Mat.diagonal(ctx.field, values + values)


def check_torus_conjugation(ctx, borels, tori):
    """
    Count pairs ``(b, s)`` with ``b s b^-1`` outside ``t + n_s``.

    :return: number of failures
    """
    target = _matrix_span(ctx, _torus_basis(ctx) + _ns_basis(ctx))
    failures = 0
    for b in borels:
        b_inv = b.inverse()
        for s in tori:
            if not target.contains((b * s * b_inv).flatten()):
                failures += 1
    return failures


def check_d_conjugation(ctx, borels, elements, k):
    """
    Count pairs ``(b, d)``, ``d`` in ``D_k``, whose conjugate ``y = b d b^-1``
    leaves the upper right block, violates ``y_ii = sum_{j>=i} A_ij^2 d_j``,
    or has ``y_ii != 0`` for some ``i > k``.

    :return: number of failures
    """
    field, n = ctx.field, ctx.n
    mul = field.mul
    failures = 0
    for b in borels:
        b_inv = b.inverse()
        for d in elements:
            y = b * d * b_inv
            ok = all(
                y.data[i][j] == 0
                for i in range(2 * n)
                for j in range(2 * n)
                if not (i < n <= j)
            )
            for i in range(n):
                expected = 0
                for j in range(i, n):
                    a = b.data[i][j]
                    expected ^= mul(mul(a, a), d.data[j][n + j])
                diagonal = y.data[i][n + i]
                if diagonal != expected or (i >= k and diagonal):
                    ok = False
            if not ok:
                failures += 1
    return failures


def d_elements(ctx, k):
    """All elements of ``D_k(F_q)``."""
    field, n = ctx.field, ctx.n
    out = []
    for values in itertools.product(range(field.order), repeat=k):
        data = [[0] * (2 * n) for _ in range(2 * n)]
        for i, value in enumerate(values):
            data[i][n + i] = value
        out.append(Mat(field, data))
    return out


def random_d_element(ctx, k, rng):
    field, n = ctx.field, ctx.n
    data = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(k):
        data[i][n + i] = int(field.random(rng))
    return Mat(field, data)


UnipotentReport = collections.namedtuple(
    "UnipotentReport", ["unipotent", "nilpotent", "bijective"]
)


def check_unipotent_bijection(ctx):
    """
    Compare unipotent points of ``G^{ιθ}`` with nilpotent points of ``g^θ``.

    ``{g : ᵗ(Jg) = Jg}`` is the linear space ``g^θ``, which contains 1, so
    both sides are scanned inside one span.
    """
    field = ctx.field
    basis = batch.to_array(lie_algebra(ctx).matrices())
    identity = np.eye(ctx.N, dtype=np.uint16)[None]
    unipotent_images, nilpotent = [], []
    for chunk in batch.span_chunks(field, basis):
        shifted = chunk ^ identity
        mask = batch.nilpotent_mask(field, shifted)
        unipotent_images.append(batch.encode(field, shifted[mask]))
        nilpotent.append(batch.encode(field, chunk[batch.nilpotent_mask(field, chunk)]))
    images = np.sort(np.concatenate(unipotent_images))
    targets = np.sort(np.concatenate(nilpotent))
    bijective = len(np.unique(images)) == len(images)
    bijective = bijective and np.array_equal(images, targets)
    return UnipotentReport(len(images), len(targets), bool(bijective))
