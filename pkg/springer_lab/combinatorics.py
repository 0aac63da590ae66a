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
"""Label calculus for the Springer correspondence Module."""

import collections
import functools
import itertools
import math

from springer_lab import logger
from springer_lab import util
from springer_lab.linalg import Partition

LOG = logger.get_logger(__name__)

GROUP_KINDS = ("S_n", "W_n2", "W_n3", "W_nat")
DIM_KINDS = (
    "n_stat",
    "gl_orbit",
    "ah_orbit",
    "sp_orbit",
    "y_tilde_k",
    "y_k",
    "x_tilde_m",
    "x_m",
    "x_tilde_m_nil",
    "sx_m_nil",
    "stratum",
    "d_lambda",
    "d_split",
)
CSV_HEADER = (
    "lambda1",
    "lambda2",
    "lambda3",
    "m1",
    "m2",
    "m3",
    "k",
    "dim_rho_hat",
    "dim_X",
    "d_lambda",
)


class LabelError(util.SpringerLabError):
    """A label does not fit the group or weight it is used with."""

    code = "label_error"


@functools.lru_cache(maxsize=None)
def partitions(n):
    """
    All partitions of ``n``, largest first.

    >>> [p.parts for p in partitions(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise LabelError("Cannot partition a negative number")

    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, bound), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail

    return tuple(Partition(p) for p in gen(n, n))


class Multipartition(object):
    """An r-tuple of partitions."""

    __slots__ = ("components",)

    def __init__(self, components):
        """Construct Multipartition."""
        self.components = tuple(
            c if isinstance(c, Partition) else Partition(c) for c in components
        )
        if not self.components:
            raise LabelError("A multipartition needs at least one component")

    @property
    def r(self):
        return len(self.components)

    @property
    def n(self):
        return sum(c.n for c in self.components)

    @property
    def sizes(self):
        return tuple(c.n for c in self.components)

    @property
    def key(self):
        return tuple(c.parts for c in self.components)

    @property
    def slug(self):
        """Compact text form, ``((1), (1), ())`` is ``1|1|-``."""
        return "|".join(",".join(str(p) for p in c) or "-" for c in self.components)

    @classmethod
    def from_slug(cls, text):
        try:
            return cls(
                () if part in ("-", "") else tuple(int(p) for p in part.split(","))
                for part in text.split("|")
            )
        except ValueError:
            raise LabelError("Malformed multipartition '{}'".format(text))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.r

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        if isinstance(other, Multipartition):
            return self.components == other.components
        if isinstance(other, (tuple, list)):
            return self.components == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.components)

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return "Multipartition({})".format([list(c.parts) for c in self.components])

    def __str__(self):
        return "({})".format(", ".join(str(c) for c in self.components))

    def to_json(self):
        return [c.to_json() for c in self.components]


def weight_vectors(n, r):
    """All r-tuples of non-negative integers summing to ``n``."""
    if r == 1:
        return [(n,)]
    return [
        (first,) + rest
        for first in range(n + 1)
        for rest in weight_vectors(n - first, r - 1)
    ]


def multipartitions_of_sizes(sizes):
    return [
        Multipartition(combo)
        for combo in itertools.product(*(partitions(s) for s in sizes))
    ]


def enumerate_multipartitions(n, r):
    """
    Every r-multipartition of ``n``, sorted by component sequences.

    >>> len(enumerate_multipartitions(2, 3))
    9
    """
    if n < 0 or r < 1:
        raise LabelError("Need n >= 0 and r >= 1", detail={"n": n, "r": r})
    found = []
    for sizes in weight_vectors(n, r):
        found.extend(multipartitions_of_sizes(sizes))
    return sorted(found)


def multinomial(n, parts):
    if sum(parts) != n or any(p < 0 for p in parts):
        raise LabelError("Parts do not sum to {}".format(n))
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def binomial(n, k):
    return math.comb(n, k) if 0 <= k <= n else 0


class CompositionM(collections.namedtuple("CompositionM", ["m1", "m2", "m3"])):
    """A weak composition ``(m1, m2, m3)`` of ``n``."""

    __slots__ = ()

    @property
    def n(self):
        return self.m1 + self.m2 + self.m3

    @property
    def p1(self):
        return self.m1

    @property
    def p2(self):
        return self.m1 + self.m2

    def leq(self, other):
        """``m' <= m`` iff both partial sums are dominated."""
        if self.n != other.n:
            raise LabelError("Compositions of different weights are not comparable")
        return self.p1 <= other.p1 and self.p2 <= other.p2

    def to_json(self):
        return list(self)

    def __str__(self):
        return "({},{},{})".format(*self)


def compositions(n, open_part=False):
    """
    All compositions of ``n`` into three parts, ``m3 = 0`` ones only if
    ``open_part`` is set.
    """
    out = [CompositionM(*w) for w in weight_vectors(n, 3)]
    if open_part:
        out = [m for m in out if m.m3 == 0]
    return sorted(out, reverse=True)


def composition_count(n):
    """
    >>> composition_count(4)
    15
    """
    return (n + 1) * (n + 2) // 2


class IrrepLabel(object):
    """An irreducible representation label of one of the reflection groups."""

    def __init__(self, group, label, m=None):
        """
        Initialize a label and returns None.

        :param group: One of :data:`GROUP_KINDS`.
        :param label: A :class:`Partition` for ``S_n``, a
         :class:`Multipartition` for ``W_n2``/``W_n3``, and
         ``(lambda1, (lambda2, lambda3))`` for ``W_nat``.
        :param m: The :class:`CompositionM` of a ``W_nat`` label.
        :returns: None
        """
        if group not in GROUP_KINDS:
            raise LabelError(
                "Unknown group '{}'".format(group),
                detail={"allowed": list(GROUP_KINDS)},
            )
        self.group = group
        self.label = _normalize_label(group, label)
        self.m = m

    @property
    def n(self):
        if self.group == "S_n":
            return self.label.n
        if self.group == "W_nat":
            lambda1, (lambda2, lambda3) = self.label
            return lambda1.n + lambda2.n + lambda3.n
        return self.label.n

    @property
    def dim(self):
        return irrep_dim(self)

    def __eq__(self, other):
        if not isinstance(other, IrrepLabel):
            return NotImplemented
        return (self.group, self.label) == (other.group, other.label)

    def __hash__(self):
        return hash((self.group, self.label))

    def __repr__(self):
        return "IrrepLabel({}, {})".format(self.group, self.label)

    def to_json(self):
        if self.group == "W_nat":
            lambda1, (lambda2, lambda3) = self.label
            label = [lambda1.to_json(), [lambda2.to_json(), lambda3.to_json()]]
        else:
            label = self.label.to_json()
        return {"group": self.group, "label": label, "dim": self.dim}


def _normalize_label(group, label):
    try:
        if group == "S_n":
            return label if isinstance(label, Partition) else Partition(label)
        if group == "W_nat":
            lambda1, (lambda2, lambda3) = label
            return (Partition(lambda1), (Partition(lambda2), Partition(lambda3)))
        label = label if isinstance(label, Multipartition) else Multipartition(label)
    except (TypeError, ValueError) as e:
        raise LabelError("Malformed {} label: {}".format(group, e))
    expected = {"W_n2": 2, "W_n3": 3}[group]
    if label.r != expected:
        raise LabelError("{} labels have {} components".format(group, expected))
    return label


def irrep_dim(label):
    """
    Dimension of an irreducible representation from its label.

    ``W_n,r``: ``multinomial(n; |lambda_i|)`` times the hook dimensions.
    ``W_nat``: ``hook(lambda1) binom(m2, |lambda2|) hook(lambda2) hook(lambda3)``.
    """
    if label.group == "S_n":
        return label.label.hook_dim()
    if label.group == "W_nat":
        lambda1, (lambda2, lambda3) = label.label
        m2 = lambda2.n + lambda3.n
        return (
            lambda1.hook_dim()
            * binomial(m2, lambda2.n)
            * lambda2.hook_dim()
            * lambda3.hook_dim()
        )
    mp = label.label
    dim = multinomial(mp.n, mp.sizes)
    for c in mp:
        dim *= c.hook_dim()
    return dim


def group_order(group, n=None, m=None):
    """
    >>> group_order("W_n3", n=2)
    18
    """
    if group == "S_n":
        return math.factorial(n)
    if group in ("W_n2", "W_n3"):
        r = 2 if group == "W_n2" else 3
        return r ** n * math.factorial(n)
    if group == "W_nat":
        m = CompositionM(*m)
        return math.factorial(m.m1) * 2 ** m.m2 * math.factorial(m.m2)
    raise LabelError("Unknown group '{}'".format(group))


def irreducibles(group, n=None, m=None):
    """Every irreducible label of a group."""
    if group == "S_n":
        return [IrrepLabel(group, p) for p in partitions(n)]
    if group in ("W_n2", "W_n3"):
        r = 2 if group == "W_n2" else 3
        return [IrrepLabel(group, mp) for mp in enumerate_multipartitions(n, r)]
    if group == "W_nat":
        m = CompositionM(*m)
        if m.m3:
            raise LabelError("W_nat needs m3 = 0", detail={"m": list(m)})
        labels = []
        for lambda1 in partitions(m.m1):
            for k in range(m.m2 + 1):
                for lambda2 in partitions(k):
                    for lambda3 in partitions(m.m2 - k):
                        labels.append(
                            IrrepLabel(group, (lambda1, (lambda2, lambda3)), m)
                        )
        return labels
    raise LabelError("Unknown group '{}'".format(group))


def sum_of_squares(labels):
    return sum(label.dim ** 2 for label in labels)


BijectionImage = collections.namedtuple("BijectionImage", ["bipartition", "dim"])


def bijection_wn(lambda_prime, lambda_second, n=None):
    """
    Send an irreducible of ``S_k x S_(n-k)`` to the induced ``W_n`` irreducible.

    >>> bijection_wn((1,), (1,)).dim
    2
    """
    lambda_prime, lambda_second = Partition(lambda_prime), Partition(lambda_second)
    total = lambda_prime.n + lambda_second.n
    if n is not None and n != total:
        raise LabelError(
            "Weights {} and {} do not add up to {}".format(
                lambda_prime.n, lambda_second.n, n
            )
        )
    dim = (
        binomial(total, lambda_prime.n)
        * lambda_prime.hook_dim()
        * lambda_second.hook_dim()
    )
    return BijectionImage(Multipartition((lambda_prime, lambda_second)), dim)


def bijection_wn_image(n):
    """Images of :func:`bijection_wn` over every ``k``."""
    return [
        bijection_wn(a, b)
        for k in range(n + 1)
        for a in partitions(k)
        for b in partitions(n - k)
    ]


NatHat = collections.namedtuple("NatHat", ["rho_nat", "rho_hat"])


def nat_and_hat_maps(rho, m):
    """
    Attach to ``(rho1, rho2, rho3)`` the ``W_nat`` and the ``W_n3`` labels.

    :param rho: Partitions of ``m1``, ``k`` and ``m2 - k``.
    :param m: The :class:`CompositionM` with ``m3 = 0``.
    :return: :class:`NatHat`
    """
    m = CompositionM(*m)
    if m.m3:
        raise LabelError("Only compositions with m3 = 0 carry a W_nat label")
    rho1, rho2, rho3 = (Partition(p) for p in rho)
    if rho1.n != m.m1 or rho2.n + rho3.n != m.m2:
        raise LabelError(
            "Weights ({}, {}, {}) do not fit m = {}".format(rho1.n, rho2.n, rho3.n, m)
        )
    rho_nat = IrrepLabel("W_nat", (rho1, (rho2, rho3)), m)
    rho_hat = IrrepLabel("W_n3", Multipartition((rho1, rho2, rho3)))
    return NatHat(rho_nat, rho_hat)


def grouped_labels(n):
    """
    ``W_n3`` labels grouped by the open compositions ``m``.

    :return: ordered dict from :class:`CompositionM` to list of ``(k, NatHat)``
    """
    groups = collections.OrderedDict()
    for m in compositions(n, open_part=True):
        entries = []
        for k in range(m.m2 + 1):
            for mp in multipartitions_of_sizes((m.m1, k, m.m2 - k)):
                entries.append((k, nat_and_hat_maps(mp.components, m)))
        groups[m] = entries
    return groups


def signed_permutations(n):
    """
    Elements of ``W_n`` as ``(perm, flips)``.

    ``w`` sends ``e_i`` to ``f_perm[i]`` when ``flips[i]`` is set and to
    ``e_perm[i]`` otherwise.
    """
    for perm in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            yield perm, flips


def _intersection_dim(w, m1):
    perm, flips = w
    return sum(1 for i in range(m1) if not flips[i] and perm[i] < m1)


WNatData = collections.namedtuple("WNatData", ["order", "stabilizer_count"])


def w_nat_data(n, m):
    """
    Order of ``W_nat`` next to the number of signed permutations fixing ``M_m1``.

    >>> w_nat_data(3, (1, 2, 0))
    WNatData(order=8, stabilizer_count=8)
    """
    m = CompositionM(*m)
    if m.n != n:
        raise LabelError("m = {} is not a composition of {}".format(m, n))
    if m.m3:
        raise LabelError("W_nat is defined for m3 = 0", detail={"m": list(m)})
    count = sum(
        1 for w in signed_permutations(n) if _intersection_dim(w, m.m1) == m.m1
    )
    return WNatData(group_order("W_nat", m=m), count)


def steinberg_components(n, m):
    """
    Count the ``w`` in ``W_n`` whose Steinberg piece reaches ``2n^2 + m1``.

    ``dim Z_w = dim H - dim T + dim(M_m1 cap w M_m1)``.
    """
    m = CompositionM(*m)
    dim_h, dim_t = 2 * n * n + n, n
    top = 2 * n * n + m.m1
    best, count = None, 0
    for w in signed_permutations(n):
        dim = dim_h - dim_t + _intersection_dim(w, m.m1)
        if best is None or dim > best:
            best, count = dim, 0
        if dim == best:
            count += 1
    if best != top:
        LOG.error("Top Steinberg dimension %d differs from %d", best, top)
    return count


def _as_partition(value):
    return value if isinstance(value, Partition) else Partition(value)


def _as_multipartition(value, r=3):
    mp = value if isinstance(value, Multipartition) else Multipartition(value)
    if mp.r != r:
        raise LabelError("Expected a {}-multipartition".format(r))
    return mp


def _dim_h(n):
    return 2 * n * n + n


def _unipotent_radical(n, m1):
    rest = n - m1
    return (_dim_h(n) - m1 * m1 - _dim_h(rest)) // 2


def _sp_orbit(bipartition):
    lambda2, lambda3 = (_as_partition(p) for p in bipartition)
    n = lambda2.n + lambda3.n
    return 2 * (n * n - n - 2 * (lambda2 + lambda3).n_statistic() + lambda2.n)


def _stratum(multipartition, dim_o2=None):
    lambda1, lambda2, lambda3 = _as_multipartition(multipartition)
    n = lambda1.n + lambda2.n + lambda3.n
    m1 = lambda1.n
    if dim_o2 is None:
        return None
    dim_o1 = m1 * m1 - 2 * lambda1.n_statistic()
    return 2 * _unipotent_radical(n, m1) + dim_o1 + dim_o2


def _d_lambda(multipartition, dim_o2=None):
    mp = _as_multipartition(multipartition)
    dim_x = _stratum(mp, dim_o2)
    if dim_x is None:
        return None
    top = 2 * mp.n * mp.n + mp[0].n
    if (top - dim_x) % 2:
        raise LabelError("Odd codimension for {}".format(mp))
    return (top - dim_x) // 2


def _d_split(multipartition, dim_o2=None):
    mp = _as_multipartition(multipartition)
    if dim_o2 is None:
        return None
    n_prime = mp[1].n + mp[2].n
    return mp[0].n_statistic() + (2 * n_prime * n_prime - dim_o2) // 2


def dim_formulas(kind, **args):
    """
    Evaluate one of the dimension formulas of :data:`DIM_KINDS`.

    ``stratum``, ``d_lambda`` and ``d_split`` take ``dim_o2``; without it they
    return None.

    >>> dim_formulas("gl_orbit", n=3, lam=(2, 1))
    4
    >>> dim_formulas("ah_orbit", n=2, bipartition=((1,), (1,)))
    3
    """
    n = args.get("n")
    if kind == "n_stat":
        return _as_partition(args["lam"]).n_statistic()
    if kind == "gl_orbit":
        lam = _as_partition(args["lam"])
        return n * n - n - 2 * lam.n_statistic()
    if kind == "ah_orbit":
        first, second = (_as_partition(p) for p in args["bipartition"])
        return n * n - n - 2 * (first.n_statistic() + second.n_statistic()) + first.n
    if kind == "sp_orbit":
        return _sp_orbit(args["bipartition"])
    if kind in ("y_tilde_k", "y_k"):
        k = args["k"]
        if not 0 <= k <= n:
            raise LabelError("k must lie in 0..n", detail={"k": k})
        if kind == "y_tilde_k":
            return _dim_h(n) - n + k
        return _dim_h(n) - 2 * n + 2 * k
    if kind in ("x_tilde_m", "x_m", "x_tilde_m_nil", "sx_m_nil"):
        m = CompositionM(*args["m"])
        n = m.n
        if kind == "x_tilde_m":
            return 2 * n * n + 2 * m.m1 + m.m2
        if kind == "x_m":
            return 2 * n * n + 2 * m.m1 + m.m2 - m.m3
        if kind == "x_tilde_m_nil":
            return 2 * n * n + m.m1 - m.m3
        if m.m3:
            raise LabelError("The nilpotent piece is defined for m3 = 0")
        return 2 * n * n + m.m1
    if kind == "stratum":
        return _stratum(args["multipartition"], args.get("dim_o2"))
    if kind == "d_lambda":
        return _d_lambda(args["multipartition"], args.get("dim_o2"))
    if kind == "d_split":
        return _d_split(args["multipartition"], args.get("dim_o2"))
    raise LabelError(
        "Unknown dimension formula '{}'".format(kind),
        detail={"allowed": list(DIM_KINDS)},
    )


def regular_sp_orbit_dim(n):
    """``dim Sp_2n - n``, the dimension of the regular nilpotent orbit."""
    return _dim_h(n) - n


class SpringerRow(
    collections.namedtuple(
        "SpringerRow",
        [
            "multipartition",
            "m",
            "k",
            "rho_hat",
            "rho_nat",
            "dim_rho_hat",
            "dim_rho_nat",
            "dim_x",
            "d_lambda",
        ],
    )
):
    """One stratum with its Weyl group data."""

    __slots__ = ()

    def csv_row(self):
        lambda1, lambda2, lambda3 = self.multipartition
        return [
            str(lambda1),
            str(lambda2),
            str(lambda3),
            self.m.m1,
            self.m.m2,
            self.m.m3,
            self.k,
            self.dim_rho_hat,
            "" if self.dim_x is None else self.dim_x,
            "" if self.d_lambda is None else self.d_lambda,
        ]

    def to_json(self):
        return {
            "lambda": self.multipartition.to_json(),
            "m": self.m.to_json(),
            "k": self.k,
            "rho_hat": self.rho_hat.to_json(),
            "rho_nat": self.rho_nat.to_json(),
            "dim_rho_hat": self.dim_rho_hat,
            "dim_rho_nat": self.dim_rho_nat,
            "dim_X": self.dim_x,
            "d_lambda": self.d_lambda,
            "provenance": "formula" if self.dim_x is not None else "derived",
        }


def springer_table(n, dim_oracle=None):
    """
    One row per 3-multipartition of ``n``, grouped by open composition.

    :param n: Rank.
    :param dim_oracle: Callable ``(n_prime, (lambda2, lambda3)) -> dim`` giving
     the symplectic orbit dimension, or None to leave dimensions null.
    :return: list of :class:`SpringerRow`
    """
    rows = []
    for m, entries in grouped_labels(n).items():
        for k, labels in entries:
            mp = labels.rho_hat.label
            dim_o2 = None
            if dim_oracle is not None:
                dim_o2 = dim_oracle(mp[1].n + mp[2].n, (mp[1], mp[2]))
            rows.append(
                SpringerRow(
                    mp,
                    m,
                    k,
                    labels.rho_hat,
                    labels.rho_nat,
                    labels.rho_hat.dim,
                    labels.rho_nat.dim,
                    _stratum(mp, dim_o2),
                    _d_lambda(mp, dim_o2),
                )
            )
    return rows


def rendering_oracle(table):
    """Dimension oracle reading the rendering table, null past its range."""

    def oracle(n_prime, bipartition):
        return table.dim(n_prime, tuple(Partition(p) for p in bipartition))

    return oracle
