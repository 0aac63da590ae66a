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
"""Nilpotent orbit counts Suite Module."""

from springer_lab import combinatorics
from springer_lab import geometry
from springer_lab import gf2k
from springer_lab import linalg
from springer_lab import logger
from springer_lab import orbits
from springer_lab import util
from springer_lab.linalg import Mat
from springer_lab.suite import base

LOG = logger.get_logger(__name__)

SP_INSTANCES = ((1, 2), (1, 4), (2, 2), (2, 4), (3, 2))
AH_INSTANCES = tuple((n, q) for n in (1, 2, 3) for q in (2, 4))
# censuses with more nilpotents than this are checked on sampled members
EXHAUSTIVE_MEMBERS = 4096
SAMPLES = 256


@util.lru_cache(maxsize=None)
def sp_census(n, q, jobs=1, max_size=None):
    ctx = geometry.get_context(2 * n, gf2k.field_by_size(q))
    return orbits.sp_nilpotent_census(ctx, jobs=jobs, max_size=max_size)


@util.lru_cache(maxsize=None)
def pair_census(n, q, max_size=None):
    return orbits.gl_pair_census(gf2k.field_by_size(q), n, max_size=max_size)


def _samples(census):
    return None if len(census.keys) <= EXHAUSTIVE_MEMBERS else SAMPLES


def _label(n, q):
    return "n{}_q{}".format(n, q)


def _bipartition_count(n):
    return len(combinatorics.enumerate_multipartitions(n, 2))


def _orbit_count(n, q):
    def func(config):
        census = sp_census(n, q, config.jobs, config.limits["max_group_order"])
        LOG.debug("%d nilpotents in %d orbits", len(census.keys), len(census.roots))
        return _bipartition_count(n), len(census.roots)

    return func


def _fingerprints(n, q):
    def func(config):
        ctx = geometry.get_context(2 * n, gf2k.field_by_size(q))
        census = sp_census(n, q, config.jobs, config.limits["max_group_order"])
        records = orbits.orbit_report(ctx, census, config.rng, _samples(census))
        expected = {"distinct": len(census.roots), "orbit_constant": True}
        actual = {
            "distinct": len({r.fingerprint for r in records}),
            "orbit_constant": all(r.constant for r in records),
        }
        return expected, actual

    return func


def _pair_labels(n, q):
    def func(config):
        census = pair_census(n, q, config.limits["max_group_order"])
        samples = _samples(census)
        labels = set()
        constant = sum_rule = True
        for root in census.roots:
            x, v = orbits.census_pair(census, root)
            label = orbits.ah_pair_label(x, v)
            labels.add(label)
            members = orbits.sample_indices(
                config.rng, orbits.census_members(census, root), samples
            )
            for index in members:
                y, w = orbits.census_pair(census, index)
                other = orbits.ah_pair_label(y, w)
                constant = constant and other == label
                jordan = linalg.jordan_type(y)
                sum_rule = sum_rule and other.lambda1 + other.lambda2 == jordan
        count = _bipartition_count(n)
        expected = {
            "orbits": count,
            "labels": count,
            "orbit_constant": True,
            "sum_rule": True,
        }
        actual = {
            "orbits": len(census.roots),
            "labels": len(labels),
            "orbit_constant": constant,
            "sum_rule": sum_rule,
        }
        return expected, actual

    return func


def _zero_pair_label(config):
    field = gf2k.get_field(1)
    expected, actual = {}, {}
    for n in (1, 2, 3):
        x = Mat.zeros(field, n)
        v = (1,) + (0,) * (n - 1)
        label = orbits.ah_pair_label(x, v)
        expected[str(n)] = [[1] * n, []]
        actual[str(n)] = label.to_json()
    return expected, actual


class OrbitCounts(base.Suite):
    """Orbit counts of nilpotent elements and pairs against bipartition counts."""

    @property
    def name(self):
        return "orbit-counts"

    def checks(self):
        checks = []
        for n, q in SP_INSTANCES:
            checks.append(
                self.check(
                    "sp_{}".format(_label(n, q)),
                    "Sp_{}(F_{}) has |P_({},2)| nilpotent orbits".format(2 * n, q, n),
                    _orbit_count(n, q),
                )
            )
        for n, q in SP_INSTANCES:
            checks.append(
                self.check(
                    "fingerprint_{}".format(_label(n, q)),
                    "the (lambda, eps) fingerprint separates the orbits of "
                    "sp_{}(F_{}) and is orbit-constant".format(2 * n, q),
                    _fingerprints(n, q),
                )
            )
        for n, q in AH_INSTANCES:
            checks.append(
                self.check(
                    "pair_label_{}".format(_label(n, q)),
                    "pair labels classify GL_{}(F_{}) orbits on nilpotent pairs, "
                    "lambda1 + lambda2 is the Jordan type".format(n, q),
                    _pair_labels(n, q),
                )
            )
        checks.append(
            self.check(
                "pair_label_zero",
                "x = 0 with v != 0 is labelled ((1^n), ())",
                _zero_pair_label,
            )
        )
        return checks

