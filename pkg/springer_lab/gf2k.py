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
"""Exact arithmetic in GF(2^k) Module."""

import functools
import re

import galois
import numpy as np

from springer_lab import logger
from springer_lab import util

LOG = logger.get_logger(__name__)

MAX_DEGREE = 16

# One fixed irreducible (in fact primitive) modulus per degree, coefficients
# encoded as bitmasks: bit i holds the coefficient of x^i.
MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

FIELD_NAME_RE = re.compile(r"^gf2\^(\d+)$")


class FieldMismatchError(util.SpringerLabError):
    """Operands belong to distinct fields."""

    code = "field_mismatch"


class ResourceLimitError(util.SpringerLabError):
    """A desk-scale resource guard was exceeded."""

    code = "resource_limit"


class ReducibleModulusError(util.SpringerLabError):
    """The defining polynomial of a field is reducible or has the wrong degree."""

    code = "reducible_modulus"


def modulus_poly(modulus):
    """The GF(2) polynomial of a modulus bitmask."""
    return galois.Poly.Int(modulus, field=galois.GF2)


def is_irreducible(modulus):
    """
    Irreducibility of a GF(2) polynomial given as a bitmask.

    >>> is_irreducible(0b111)
    True
    >>> is_irreducible(0b101)
    False
    """
    if modulus < 2:
        return False
    return bool(modulus_poly(modulus).is_irreducible())


class Field(object):
    """
    The finite field GF(2^k) defined by a modulus of degree ``k``.

    The arithmetic is the :mod:`galois` field class of that modulus. Raw
    integer bitmasks are the interchange format: :meth:`array` lifts them
    to a ``FieldArray`` for elimination, and log/exp tables read off the
    field class serve the scalar products in hot loops of
    :mod:`springer_lab.linalg`. :class:`FieldElem` wraps raw values for user
    facing code.
    """

    def __init__(self, k, modulus=None):
        """
        Initialize a new field and returns None.

        :param k: Extension degree, ``1 <= k <= 16``.
        :param modulus: Bitmask of an irreducible polynomial of degree ``k``,
         the packaged one by default.
        :returns: None
        """
        if k < 1 or k > MAX_DEGREE:
            raise ResourceLimitError(
                "Field degree {} outside the supported range 1..{}".format(
                    k, MAX_DEGREE
                ),
                detail={"k": k},
            )
        modulus = MODULI[k] if modulus is None else modulus
        if modulus.bit_length() - 1 != k or not is_irreducible(modulus):
            raise ReducibleModulusError(
                "Modulus {} is not an irreducible polynomial of degree {}".format(
                    bin(modulus), k
                ),
                detail={"k": k, "modulus": modulus},
            )
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self.name = "gf2^{}".format(k)
        if k == 1:
            self.gf = galois.GF2
        else:
            self.gf = galois.GF(self.order, irreducible_poly=modulus_poly(modulus))
        self._build_tables()

    def __reduce__(self):
        if self.modulus == MODULI[self.k]:
            return (get_field, (self.k,))
        return (Field, (self.k, self.modulus))

    def __repr__(self):
        return "Field({})".format(self.name)

    def _build_tables(self):
        n = self.order - 1
        generator = self.gf.primitive_element
        exp = [int(a) for a in generator ** np.arange(n)]
        log = [0] * self.order
        for i, value in enumerate(exp):
            log[value] = i
        self.generator_bits = int(generator)
        self._exp = exp + exp
        self._log = log

    def array(self, rows, cols=None):
        """
        Lift raw bitmask rows to a ``FieldArray`` of this field.

        :param rows: A (possibly empty) sequence of equally long rows.
        :param cols: Column count, needed only when ``rows`` is empty.
        """
        data = np.array(rows, dtype=np.int64)
        if cols is not None:
            data = data.reshape(-1, cols)
        return self.gf(data)

    # raw integer arithmetic

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in {}".format(self.name))
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def square(self, a):
        return self.mul(a, a)

    def power(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    # element level API

    def element(self, bits):
        """Return the element with the given coefficient bitmask."""
        if not 0 <= bits < self.order:
            raise ValueError("{} is not an element of {}".format(bits, self.name))
        return FieldElem(self, bits)

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    @property
    def generator(self):
        return FieldElem(self, self.generator_bits)

    def enumerate(self):
        """
        Return all elements in increasing bitmask order.

        :return: list of :class:`FieldElem`
        """
        return [FieldElem(self, bits) for bits in range(self.order)]

    def nonzero(self):
        return range(1, self.order)

    def random(self, rng):
        """Draw a uniformly random element with a numpy ``Generator``."""
        return FieldElem(self, int(rng.integers(0, self.order)))

    def random_nonzero(self, rng):
        return FieldElem(self, int(rng.integers(1, self.order)))


class FieldElem(object):
    """
    An immutable element of a :class:`Field`.

    Elements compare equal to their bitmask as an int and hash like it.
    """

    __slots__ = ("field", "bits")

    def __init__(self, field, bits):
        """Construct FieldElem."""
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise FieldMismatchError(
                    "Cannot combine elements of {} and {}".format(
                        self.field.name, other.field.name
                    )
                )
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.bits ^ b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.bits, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(self.bits, b))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.power(self.bits, e))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.bits))

    def frobenius(self):
        return FieldElem(self.field, self.field.square(self.bits))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field is other.field and self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def __repr__(self):
        return "{}({})".format(self.field.name, self.bits)
@functools.lru_cache(maxsize=None)
def get_field(k):
    """
    Return the cached :class:`Field` of degree ``k``.

    :param k: Extension degree.
    :return: Field
    """
    LOG.debug("Building field gf2^%d", k)
    return Field(k)


def field_by_size(q):
    """Return the field with ``q`` elements, ``q`` a power of two."""
    if q < 2 or q & (q - 1):
        raise util.SpringerLabError(
            "Field size {} is not a power of two".format(q), detail={"q": q}
        )
    return get_field(q.bit_length() - 1)


def parse_field_name(name):
    """
    Resolve a field name of the form ``gf2^k``.

    >>> parse_field_name("gf2^2").order
    4
    """
    match = FIELD_NAME_RE.match(str(name))
    if not match:
        raise util.SpringerLabError(
            "Unknown field name '{}'".format(name), detail={"field": name}
        )
    return get_field(int(match.group(1)))


def arith(a, b, op):
    """Apply ``op`` (``"add"`` or ``"mul"``) to two elements of one field."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError("Unknown operation '{}'".format(op))


def inv(a):
    return a.inverse()


def frobenius(a):
    return a.frobenius()


def enumerate_field(field):
    return field.enumerate()
