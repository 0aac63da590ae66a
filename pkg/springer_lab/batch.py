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
"""Vectorized matrix batches over small fields Module."""

import functools

import numpy as np

from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger

LOG = logger.get_logger(__name__)

# batches use lookup tables of size q x q
MAX_BATCH_DEGREE = 8
# keys are packed base-q digits in an int64
MAX_KEY_BITS = 62
DEFAULT_CHUNK = 1 << 17


def check_field(field):
    if field.k > MAX_BATCH_DEGREE:
        raise gf2k.ResourceLimitError(
            "Batch arithmetic supports fields up to gf2^{}".format(MAX_BATCH_DEGREE),
            detail={"field": field.name},
        )


@functools.lru_cache(maxsize=None)
def mul_table(k):
    field = gf2k.get_field(k)
    q = field.order
    table = np.zeros((q, q), dtype=np.uint16)
    for a in range(1, q):
        for b in range(1, q):
            table[a, b] = field.mul(a, b)
    return table


def to_array(mats):
    """Stack :class:`springer_lab.linalg.Mat` objects into a uint16 array."""
    return np.array([m.data for m in mats], dtype=np.uint16)


def to_mat(field, array):
    return linalg.Mat(field, array.tolist())


def matmul(field, a, b):
    """
    Batched matrix product over ``field``.

    ``a`` and ``b`` broadcast like :func:`numpy.matmul`.
    """
    check_field(field)
    if field.k == 1:
        return (np.matmul(a.astype(np.int64), b.astype(np.int64)) & 1).astype(np.uint16)
    table = mul_table(field.k)
    inner = a.shape[-1]
    out = None
    for l in range(inner):
        term = table[a[..., :, l, None], b[..., None, l, :]]
        out = term if out is None else out ^ term
    return out


def apply(field, a, v):
    """Batched matrix-vector product, ``v`` of shape (..., n)."""
    return matmul(field, a, v[..., :, None])[..., 0]


def nilpotent_mask(field, x):
    """Boolean mask of the nilpotent matrices in a batch of square matrices."""
    n = x.shape[-1]
    power, reach = x, 1
    while reach < n:
        power = matmul(field, power, power)
        reach *= 2
    return ~power.reshape(power.shape[0], -1).any(axis=1)


def key_weights(field, size):
    bits = field.k * size
    if bits > MAX_KEY_BITS:
        raise gf2k.ResourceLimitError(
            "Cannot pack {} entries of {} into one key".format(size, field.name)
        )
    return (np.int64(field.order) ** np.arange(size, dtype=np.int64)).astype(np.int64)


def encode(field, array):
    """Pack each matrix (or vector) of a batch into one int64 key."""
    flat = array.reshape(array.shape[0], -1).astype(np.int64)
    return flat @ key_weights(field, flat.shape[1])


def decode(field, keys, shape):
    size = int(np.prod(shape))
    keys = np.asarray(keys, dtype=np.int64)
    digits = (keys[:, None] // key_weights(field, size)[None, :]) % field.order
    return digits.astype(np.uint16).reshape((len(keys),) + tuple(shape))


def digits(field, start, stop, width):
    """All base-q digit vectors for the integers in ``[start, stop)``."""
    values = np.arange(start, stop, dtype=np.int64)
    powers = np.int64(field.order) ** np.arange(width, dtype=np.int64)
    return ((values[:, None] // powers[None, :]) % field.order).astype(np.uint16)


def span_chunks(field, basis, chunk=DEFAULT_CHUNK):
    """
    Yield every element of the span of ``basis`` in chunks.

    :param field: The field.
    :param basis: A uint16 array of shape (d, r, c).
    :return: generator of arrays of shape (m, r, c)
    """
    check_field(field)
    d = basis.shape[0]
    total = field.order ** d
    for start in range(0, total, chunk):
        coeffs = digits(field, start, min(total, start + chunk), d)
        out = None
        for i in range(d):
            term = mul_table(field.k)[coeffs[:, i, None, None], basis[None, i]]
            out = term if out is None else out ^ term
        if out is None:
            out = np.zeros((len(coeffs),) + basis.shape[1:], dtype=np.uint16)
        yield out


def all_matrices(field, n, chunk=DEFAULT_CHUNK):
    """Yield every n x n matrix over ``field`` in chunks."""
    total = field.order ** (n * n)
    for start in range(0, total, chunk):
        yield digits(field, start, min(total, start + chunk), n * n).reshape(-1, n, n)


def closure(field, generators, max_order=None):
    """
    Enumerate the group generated by ``generators`` by breadth-first search.

    :param field: The field.
    :param generators: A uint16 array of shape (g, n, n).
    :param max_order: Abort once more elements than this are found.
    :return: sorted int64 array of element keys
    """
    n = generators.shape[-1]
    identity = np.eye(n, dtype=np.uint16)[None]
    seen = np.unique(encode(field, identity))
    frontier = identity
    while len(frontier):
        images = matmul(field, frontier[:, None], generators[None]).reshape(-1, n, n)
        keys, index = np.unique(encode(field, images), return_index=True)
        fresh = ~np.isin(keys, seen, assume_unique=True)
        frontier = images[index[fresh]]
        seen = np.union1d(seen, keys[fresh])
        if max_order is not None and len(seen) > max_order:
            raise gf2k.ResourceLimitError(
                "Group closure exceeded {} elements".format(max_order),
                detail={"max_order": max_order},
            )
    return seen


def lookup(sorted_keys, keys):
    """Indices of ``keys`` in ``sorted_keys``, -1 where absent."""
    index = np.searchsorted(sorted_keys, keys)
    index = np.minimum(index, len(sorted_keys) - 1)
    found = sorted_keys[index] == keys
    return np.where(found, index, -1)
