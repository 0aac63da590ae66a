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
"""Exact linear algebra over GF(2^k) Module."""

import functools
import math

import numpy as np

from springer_lab import gf2k
from springer_lab import logger
from springer_lab import util

LOG = logger.get_logger(__name__)


class ShapeError(util.SpringerLabError):
    """Operands have incompatible shapes."""

    code = "shape_error"


class NilpotencyError(util.SpringerLabError):
    """A nilpotent matrix was required."""

    code = "not_nilpotent"


class StabilityError(util.SpringerLabError):
    """A subspace is not stable under the given map."""

    code = "not_stable"


class SingularMatrixError(util.SpringerLabError):
    """An invertible matrix was required."""

    code = "singular_matrix"


def _raw(value):
    return int(value)


def _pack(row):
    bits = 0
    for j, entry in enumerate(row):
        if entry:
            bits |= 1 << j
    return bits


def _unpack(bits, cols):
    return tuple((bits >> j) & 1 for j in range(cols))


class Mat(object):
    """
    An immutable dense matrix over a :class:`springer_lab.gf2k.Field`.

    Entries are kept as raw integer bitmasks in row-major tuples. Over GF(2)
    the rows are also available bit-packed, one integer per row, and products
    and eliminations use the packed form.
    """

    __slots__ = ("field", "rows", "cols", "data", "_packed", "_hash")

    def __init__(self, field, data, rows=None, cols=None):
        """
        Initialize a new matrix and returns None.

        :param field: The :class:`Field` holding every entry.
        :param data: An iterable of rows, each an iterable of ints or
         :class:`FieldElem`.
        :param rows: Row count, required only when ``data`` is empty.
        :param cols: Column count, required only when there are no rows.
        :returns: None
        """
        data = tuple(tuple(_raw(e) for e in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ShapeError("Ragged matrix data", detail={"rows": rows, "cols": cols})
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data
        self._packed = None
        self._hash = None

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(field, [[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, field, rows, cols, i, j, value=1):
        data = [[0] * cols for _ in range(rows)]
        data[i][j] = _raw(value)
        return cls(field, data, rows, cols)

    @classmethod
    def diagonal(cls, field, values):
        values = [_raw(v) for v in values]
        n = len(values)
        return cls(
            field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        columns = [tuple(_raw(e) for e in c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls(
            field,
            [[c[i] for c in columns] for i in range(rows)],
            rows,
            len(columns),
        )

    @classmethod
    def from_flat(cls, field, flat, rows, cols):
        flat = tuple(flat)
        data = [flat[i * cols : (i + 1) * cols] for i in range(rows)]
        return cls(field, data, rows, cols)

    @classmethod
    def block_diag(cls, field, *blocks):
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        data = [[0] * m for _ in range(n)]
        r = c = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    data[r + i][c + j] = block.data[i][j]
            r += block.rows
            c += block.cols
        return cls(field, data, n, m)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def packed(self):
        if self._packed is None:
            self._packed = tuple(_pack(row) for row in self.data)
        return self._packed

    @property
    def key(self):
        return self.data

    def entry(self, i, j):
        return gf2k.FieldElem(self.field, self.data[i][j])

    def __getitem__(self, index):
        i, j = index
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def flatten(self):
        return tuple(e for row in self.data for e in row)

    def _check_same(self, other):
        if other.field is not self.field:
            raise gf2k.FieldMismatchError(
                "Cannot combine matrices over {} and {}".format(
                    self.field.name, other.field.name
                )
            )

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field is other.field and self.data == other.data

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.k, self.data))
        return self._hash

    def __repr__(self):
        return "Mat({}, {})".format(self.field.name, [list(r) for r in self.data])

    def __add__(self, other):
        self._check_same(other)
        if self.shape != other.shape:
            raise ShapeError("Cannot add {} and {}".format(self.shape, other.shape))
        return Mat(
            self.field,
            [
                [a ^ b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            self.rows,
            self.cols,
        )

    __sub__ = __add__

    def __neg__(self):
        return self

    def scale(self, scalar):
        s = _raw(scalar)
        mul = self.field.mul
        return Mat(
            self.field,
            [[mul(s, a) for a in row] for row in self.data],
            self.rows,
            self.cols,
        )

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matmul(self, other):
        self._check_same(other)
        if self.cols != other.rows:
            raise ShapeError(
                "Cannot multiply {} by {}".format(self.shape, other.shape)
            )
        if self.field.k == 1:
            b_rows = other.packed
            out = []
            for a in self.packed:
                acc = 0
                while a:
                    low = a & -a
                    acc ^= b_rows[low.bit_length() - 1]
                    a ^= low
                out.append(_unpack(acc, other.cols))
            return Mat(self.field, out, self.rows, other.cols)
        mul = self.field.mul
        columns = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self.data:
            new_row = []
            for col in columns:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc ^= mul(a, b)
                new_row.append(acc)
            out.append(new_row)
        return Mat(self.field, out, self.rows, other.cols)

    def apply(self, vector):
        """Return the image of a column vector given as a tuple of raw ints."""
        vector = tuple(_raw(e) for e in vector)
        if len(vector) != self.cols:
            raise ShapeError(
                "Vector of length {} for a {} matrix".format(len(vector), self.shape)
            )
        mul = self.field.mul
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, vector):
                if a and b:
                    acc ^= mul(a, b)
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return Mat(
            self.field,
            [self.column(j) for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    @property
    def T(self):
        return self.transpose()

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not any(any(row) for row in self.data)

    def array(self):
        """The matrix as a ``FieldArray`` of its field."""
        return self.field.array(self.data, self.cols)

    def rank(self):
        if not self.rows or not self.cols:
            return 0
        return int(np.linalg.matrix_rank(self.array()))

    def inverse(self):
        if not self.is_square():
            raise ShapeError("Only square matrices are invertible")
        if not self.rows:
            return self
        try:
            inverse = np.linalg.inv(self.array())
        except np.linalg.LinAlgError:
            raise SingularMatrixError("Matrix is singular", detail=self.to_json())
        return Mat(self.field, inverse.tolist(), self.rows, self.cols)

    def is_invertible(self):
        return self.is_square() and self.rank() == self.rows

    def power(self, exponent):
        if not self.is_square():
            raise ShapeError("Only square matrices have powers")
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = Mat.identity(self.field, self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    __pow__ = power

    def is_nilpotent(self):
        return self.is_square() and self.power(self.rows).is_zero()

    def submatrix(self, row_indices, col_indices):
        return Mat(
            self.field,
            [[self.data[i][j] for j in col_indices] for i in row_indices],
            len(row_indices),
            len(col_indices),
        )

    def to_json(self):
        return {"field": self.field.name, "rows": [list(r) for r in self.data]}

    @classmethod
    def from_json(cls, doc, field=None):
        field = field or gf2k.parse_field_name(doc["field"])
        rows = doc["rows"]
        for row in rows:
            for entry in row:
                if not isinstance(entry, int) or not 0 <= entry < field.order:
                    raise util.SpringerLabError(
                        "Matrix entry {} is not an element of {}".format(
                            entry, field.name
                        ),
                        detail={"entry": entry},
                    )
        return cls(field, rows, len(rows), len(rows[0]) if rows else 0)


def _eliminate(field, rows, ncols):
    """
    Reduce ``rows`` to reduced row-echelon form.

    :return: (list of nonzero reduced rows as lists, list of pivot columns)
    """
    if not len(rows) or not ncols:
        return [], []
    reduced = field.array(rows, ncols).row_reduce().tolist()
    work = [row for row in reduced if any(row)]
    pivots = [next(j for j, a in enumerate(row) if a) for row in work]
    return work, pivots


def vec_add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def vec_scale(field, scalar, v):
    s = _raw(scalar)
    return tuple(field.mul(s, a) for a in v)


def vec_is_zero(v):
    return not any(v)


def standard_vector(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def bilinear(field, gram, u, v):
    """Evaluate ``ᵗu G v``."""
    return _dot(field, u, gram.apply(v))


def _dot(field, u, v):
    mul = field.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc ^= mul(a, b)
    return acc


def solve(a, b):
    """
    Return one solution ``x`` of ``a x = b`` as a tuple, or ``None``.

    :param a: A :class:`Mat`.
    :param b: The right hand side as a tuple of raw ints.
    :return: tuple or None
    """
    if len(b) != a.rows:
        raise ShapeError("Right hand side length does not match")
    augmented = [list(row) + [b[i]] for i, row in enumerate(a.data)]
    reduced, pivots = _eliminate(a.field, augmented, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [0] * a.cols
    for row, p in zip(reduced, pivots):
        x[p] = row[a.cols]
    return tuple(x)


def coordinates_in(field, vectors, target):
    """Coefficients expressing ``target`` in the linearly independent ``vectors``."""
    if not vectors:
        return () if vec_is_zero(target) else None
    return solve(Mat.from_columns(field, vectors), tuple(target))


class Subspace(object):
    """
    A subspace of ``field^ambient_dim`` stored by its RREF basis.

    ``shape`` is set when the ambient space is a matrix space; its vectors
    are then row-major flattened matrices.
    """

    def __init__(self, field, ambient_dim, basis, pivots, shape=None):
        """Construct Subspace. Use :meth:`span` for arbitrary vectors."""
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)
        self.shape = shape

    @classmethod
    def span(cls, field, ambient_dim, vectors, shape=None):
        vectors = [tuple(_raw(e) for e in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeError(
                    "Vector of length {} in a {}-dimensional space".format(
                        len(v), ambient_dim
                    )
                )
        reduced, pivots = _eliminate(field, vectors, ambient_dim)
        return cls(field, ambient_dim, reduced, pivots, shape)

    @classmethod
    def zero(cls, field, ambient_dim, shape=None):
        return cls(field, ambient_dim, (), (), shape)

    @classmethod
    def full(cls, field, ambient_dim, shape=None):
        return cls.span(
            field,
            ambient_dim,
            [standard_vector(ambient_dim, i) for i in range(ambient_dim)],
            shape,
        )

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    @property
    def vectors(self):
        return list(self.basis)

    @property
    def key(self):
        return self.basis

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.k, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace({}, dim={}/{})".format(
            self.field.name, self.dim, self.ambient_dim
        )

    def basis_matrix(self):
        return Mat(self.field, self.basis, self.dim, self.ambient_dim)

    def _reduce(self, v):
        v = list(_raw(e) for e in v)
        mul = self.field.mul
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a ^ mul(c, b) for a, b in zip(v, row)]
        return v

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise ShapeError("Vector length does not match the ambient space")
        return not any(self._reduce(v))

    __contains__ = contains

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v):
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the span."""
        if not self.contains(v):
            raise StabilityError("Vector is not in the subspace")
        return tuple(_raw(v[p]) for p in self.pivots)

    def combine(self, coefficients):
        out = [0] * self.ambient_dim
        mul = self.field.mul
        for c, row in zip(coefficients, self.basis):
            c = _raw(c)
            if c:
                out = [a ^ mul(c, b) for a, b in zip(out, row)]
        return tuple(out)

    def sum(self, other):
        return Subspace.span(
            self.field,
            self.ambient_dim,
            list(self.basis) + list(other.basis),
            self.shape,
        )

    def __add__(self, other):
        return self.sum(other)

    def with_vector(self, v):
        return Subspace.span(
            self.field, self.ambient_dim, list(self.basis) + [tuple(v)], self.shape
        )

    def image(self, x):
        return Subspace.span(self.field, x.rows, [x.apply(v) for v in self.basis])

    def is_stable(self, x):
        return all(self.contains(x.apply(v)) for v in self.basis)

    def perp(self, gram):
        """Return ``{w : <b, w> = 0 for every basis vector b}``."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        constraints = self.basis_matrix() * gram
        return rref_rank_kernel(constraints)[2]

    def is_isotropic(self, gram):
        return all(
            bilinear(self.field, gram, u, v) == 0
            for u in self.basis
            for v in self.basis
        )

    def matrices(self):
        if self.shape is None:
            raise ShapeError("Subspace is not a space of matrices")
        rows, cols = self.shape
        return [Mat.from_flat(self.field, v, rows, cols) for v in self.basis]

    def complement_vectors(self, candidates=None):
        """
        Greedy completion of the basis.

        Candidates default to the standard basis vectors and are taken in
        order, lowest index first, whenever they enlarge the span.
        """
        if candidates is None:
            candidates = [
                standard_vector(self.ambient_dim, i) for i in range(self.ambient_dim)
            ]
        current = self
        chosen = []
        for v in candidates:
            if not current.contains(v):
                chosen.append(tuple(v))
                current = current.with_vector(v)
        return chosen

    def to_json(self):
        return self.basis_matrix().to_json()


class Partition(object):
    """
    An integer partition with weakly decreasing positive parts.

    ``+`` is the coordinatewise sum of parts, :meth:`union` the multiset
    union of parts.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        """Construct Partition."""
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError("Partition parts must be non-negative")
        self.parts = tuple(sorted((p for p in parts if p > 0), reverse=True))

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return "Partition({})".format(list(self.parts))

    def __str__(self):
        if not self.parts:
            return "()"
        return "({})".format(",".join(str(p) for p in self.parts))

    def __add__(self, other):
        length = max(len(self), len(other))
        a = self.parts + (0,) * (length - len(self))
        b = other.parts + (0,) * (length - len(other))
        return Partition(x + y for x, y in zip(a, b))

    def union(self, other):
        return Partition(self.parts + other.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )

    def n_statistic(self):
        """Return sum over i of (i - 1) times the i-th part."""
        return sum(i * p for i, p in enumerate(self.parts))

    def hooks(self):
        conjugate = self.conjugate().parts
        return [
            (self.parts[i] - j - 1) + (conjugate[j] - i - 1) + 1
            for i in range(len(self.parts))
            for j in range(self.parts[i])
        ]

    def hook_dim(self):
        """Dimension of the irreducible S_n representation, by hook lengths."""
        return math.factorial(self.n) // functools.reduce(
            lambda a, b: a * b, self.hooks(), 1
        )

    def to_json(self):
        return list(self.parts)


def rref_rank_kernel(m):
    """
    Row-reduce ``m`` and return its RREF, rank and kernel.

    :param m: A :class:`Mat`.
    :return: (rref :class:`Mat`, rank, kernel :class:`Subspace`)
    """
    reduced, pivots = _eliminate(m.field, m.data, m.cols)
    rank = len(pivots)
    if not m.rows:
        kernel = Subspace.full(m.field, m.cols)
    elif rank == m.cols:
        kernel = Subspace.zero(m.field, m.cols)
    else:
        kernel_vectors = m.array().null_space().tolist()
        kernel = Subspace.span(m.field, m.cols, kernel_vectors)
    padded = list(reduced) + [[0] * m.cols for _ in range(m.rows - rank)]
    return Mat(m.field, padded, m.rows, m.cols), rank, kernel


def _flatten_output(value):
    if isinstance(value, Mat):
        return value.shape, value.flatten()
    value = tuple(_raw(e) for e in value)
    return (len(value),), value


def solve_linear_subspace(field, shape, constraints):
    """
    Solve homogeneous linear conditions on the entries of a matrix.

    Each constraint is a callable taking a :class:`Mat` of ``shape`` and
    returning a :class:`Mat` or a vector that must vanish. Constraints must
    be linear over ``field``; they are evaluated on the matrix units.

    :param field: The :class:`Field`.
    :param shape: (rows, cols) of the unknown matrix.
    :param constraints: A list of linear callables.
    :return: :class:`Subspace` of the matrix space, with ``shape`` set.
    """
    rows, cols = shape
    if rows <= 0 or cols <= 0:
        raise ShapeError("Matrix shape must be positive", detail={"shape": list(shape)})
    size = rows * cols
    images = []
    output_shapes = [None] * len(constraints)
    for i in range(rows):
        for j in range(cols):
            unit = Mat.unit(field, rows, cols, i, j)
            column = []
            for index, constraint in enumerate(constraints):
                try:
                    out_shape, flat = _flatten_output(constraint(unit))
                except ShapeError as e:
                    raise ShapeError(
                        "Constraint {} does not accept a {} matrix".format(
                            index, shape
                        ),
                        detail=e.detail,
                    )
                if output_shapes[index] is None:
                    output_shapes[index] = out_shape
                elif output_shapes[index] != out_shape:
                    raise ShapeError(
                        "Constraint {} produced inconsistent shapes".format(index)
                    )
                column.extend(flat)
            images.append(column)
    if not constraints:
        return Subspace.full(field, size, shape)
    system = Mat.from_columns(field, images)
    kernel = rref_rank_kernel(system)[2]
    return Subspace(field, size, kernel.basis, kernel.pivots, shape)


def jordan_type(x):
    """
    Return the Jordan type of a nilpotent matrix from its rank sequence.

    >>> from springer_lab.gf2k import get_field
    >>> jordan_type(Mat(get_field(1), [[0, 1], [0, 0]]))
    Partition([2])
    """
    if not x.is_square():
        raise ShapeError("Jordan type needs a square matrix")
    n = x.rows
    ranks = [n]
    power = Mat.identity(x.field, n)
    for _ in range(n):
        power = power * x
        ranks.append(power.rank())
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise NilpotencyError("Matrix is not nilpotent", detail=x.to_json())
    at_least = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    return Partition(at_least).conjugate()


def centralizer_algebra(x):
    """Return ``{y : yx = xy}`` as a subspace of the matrix space."""
    if not x.is_square():
        raise ShapeError("Centralizer needs a square matrix")
    return solve_linear_subspace(
        x.field, x.shape, [lambda y: y * x + x * y]
    )


def algebra_orbit_of_vector(algebra, v):
    """Return the span of ``y v`` over a basis of the matrix space ``algebra``."""
    rows, cols = algebra.shape
    v = tuple(_raw(e) for e in v)
    if len(v) != cols:
        raise ShapeError("Vector length does not match the algebra")
    return Subspace.span(algebra.field, rows, [y.apply(v) for y in algebra.matrices()])


def restrict(x, W):
    """Matrix of ``x`` restricted to the x-stable subspace ``W``, in W's basis."""
    if not W.is_stable(x):
        raise StabilityError("Subspace is not stable under the map")
    d = W.dim
    columns = [W.coordinates(x.apply(w)) for w in W.basis]
    return Mat.from_columns(x.field, columns, d) if d else Mat.zeros(x.field, 0, 0)


def restrict_and_quotient(x, W):
    """
    Return the maps induced by ``x`` on ``W`` and on ``V/W``.

    The quotient is represented on the greedy standard complement of ``W``.

    :param x: A square :class:`Mat`.
    :param W: An x-stable :class:`Subspace`.
    :return: (x_on_W, x_on_quotient)
    """
    on_w = restrict(x, W)
    complement = W.complement_vectors()
    d = W.dim
    basis = Mat.from_columns(x.field, list(W.basis) + complement, x.rows)
    conjugated = basis.inverse() * x * basis
    rest = list(range(d, x.rows))
    return on_w, conjugated.submatrix(rest, rest)


def induced_form_and_map(x, gram, W):
    """
    Return the map and form induced by ``x`` and ``gram`` on ``W^perp / W``.

    ``W`` must be isotropic with ``W`` and ``W^perp`` both x-stable.

    :return: (map :class:`Mat`, gram :class:`Mat`) on a complement of W in W^perp
    """
    field = x.field
    w_perp = W.perp(gram)
    if not w_perp.contains_subspace(W):
        raise StabilityError("Subspace is not isotropic")
    if not W.is_stable(x) or not w_perp.is_stable(x):
        raise StabilityError("Subspace or its orthogonal is not stable")
    complement = W.complement_vectors(w_perp.basis)
    d = len(complement)
    if d == 0:
        empty = Mat.zeros(field, 0, 0)
        return empty, empty
    basis = list(W.basis) + complement
    columns = []
    for u in complement:
        coeffs = coordinates_in(field, basis, x.apply(u))
        columns.append(coeffs[W.dim :])
    induced = Mat.from_columns(field, columns, d)
    induced_gram = Mat(
        field, [[bilinear(field, gram, u, w) for w in complement] for u in complement]
    )
    return induced, induced_gram
