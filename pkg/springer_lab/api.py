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
"""Springer Lab API Module."""

import traceback
from collections import UserList

import pluggy

from springer_lab import logger
from springer_lab import util
from springer_lab.suite import base
from springer_lab.util import lru_cache

LOG = logger.get_logger(__name__)

ALL_SUITES = "all"


class UnknownSuiteError(util.SpringerLabError):
    """No suite is registered under the requested name."""

    code = "unknown_suite"
    exit_code = util.EXIT_USAGE


class UserListMap(UserList):
    """A list where you can also access elements by their name.

    Example:
    foo['boo']
    foo.boo
    """

    def __getitem__(self, i):
        """Implement indexing."""
        if isinstance(i, int):
            return super(UserListMap, self).__getitem__(i)
        else:
            return self.__dict__[i]

    def get(self, key, default):
        return self.__dict__.get(key, default)

    def append(self, element):
        self.__dict__[str(element)] = element
        return super(UserListMap, self).append(element)


def _builtin_suites():
    from springer_lab.suite import combinatorics
    from springer_lab.suite import fiber_laws
    from springer_lab.suite import identities
    from springer_lab.suite import infinite_family
    from springer_lab.suite import orbit_counts

    return [
        identities.Identities,
        orbit_counts.OrbitCounts,
        infinite_family.InfiniteFamily,
        fiber_laws.FiberLaws,
        combinatorics.Combinatorics,
    ]


@lru_cache()
def suites(config=None) -> UserListMap:
    """
    Return the verification suites, built-in ones first in their fixed order.

    Third party suites register under the ``springer_lab.suite`` entry point
    group and follow sorted by name.
    """
    plugins = UserListMap()
    pm = pluggy.PluginManager("springer_lab.suite")
    try:
        pm.load_setuptools_entrypoints("springer_lab.suite")
    except Exception:
        # a broken plugin should not make the built-in suites unusable
        LOG.error("Failed to load suite entry point %s", traceback.format_exc())
    builtins = _builtin_suites()
    for suite_class in builtins:
        if not pm.is_registered(suite_class):
            pm.register(suite_class)
    loaded = []
    for p in pm.get_plugins():
        try:
            loaded.append(p(config))
        except Exception as e:
            LOG.error("Failed to load %s suite: %s", pm.get_name(p), str(e))
    position = {cls: i for i, cls in enumerate(builtins)}
    loaded.sort(key=lambda s: (position.get(type(s), len(position)), s.name))
    for suite in loaded:
        plugins.append(suite)
    return plugins


def suite_names():
    return [s.name for s in suites()] + [ALL_SUITES]


def get_suite(name):
    suite = suites().get(name, None)
    if suite is None:
        raise UnknownSuiteError(
            "Unknown suite '{}'".format(name), detail={"allowed": suite_names()}
        )
    return suite


def run_suite(name, config):
    """
    Run one suite, or every suite for ``all``, under one time budget.

    :param name: A suite name or ``all``.
    :param config: A :class:`springer_lab.config.Config`.
    :return: :class:`springer_lab.suite.base.SuiteReport`
    """
    selected = list(suites()) if name == ALL_SUITES else [get_suite(name)]
    budget = base.Budget(config.budget_seconds)
    report = base.SuiteReport(name)
    for suite in selected:
        LOG.info("Running suite '%s'", suite.name)
        report.extend(suite.run(config, budget))
    return report
