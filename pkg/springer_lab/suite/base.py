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
"""Base Suite Module."""

import abc
import collections
import operator
import time

import tree_format

from springer_lab import gf2k
from springer_lab import logger
from springer_lab import status
from springer_lab import util

LOG = logger.get_logger(__name__)

CheckRecord = status.get_check_record()


class Check(collections.namedtuple("Check", ["id", "claim", "func"])):
    """
    One verification step of a suite.

    ``func`` receives the :class:`springer_lab.config.Config` and returns an
    :class:`Outcome` or an ``(expected, actual)`` pair compared for equality.
    """

    __slots__ = ()


Outcome = collections.namedtuple("Outcome", ["expected", "actual", "status"])


def outcome(expected, actual, passed=None):
    """Build an :class:`Outcome`, passing when ``expected == actual`` by default."""
    if passed is None:
        passed = expected == actual
    return Outcome(expected, actual, status.PASS if passed else status.FAIL)


def skipped(reason, expected=None):
    return Outcome(expected, {"skipped": reason}, status.SKIPPED)


class Budget(object):
    """Wall-clock allowance shared by the suites of one run."""

    def __init__(self, seconds=None, clock=time.monotonic):
        """Construct Budget."""
        self.seconds = seconds
        self._clock = clock
        self._start = clock()
        self.tripped = False

    @property
    def exhausted(self):
        if self.seconds is None:
            return False
        if not self.tripped and self._clock() - self._start >= self.seconds:
            self.tripped = True
        return self.tripped


class SuiteReport(object):
    """Ordered check records of one or several suites."""

    def __init__(self, name, records=None, budget_exhausted=False):
        """Construct SuiteReport."""
        self.name = name
        self.records = list(records or [])
        self.budget_exhausted = budget_exhausted

    def extend(self, other):
        self.records.extend(other.records)
        self.budget_exhausted = self.budget_exhausted or other.budget_exhausted

    def count(self, state):
        return sum(1 for r in self.records if r.status == state)

    @property
    def exit_code(self):
        if self.count(status.FAIL):
            return util.EXIT_FAIL
        if self.budget_exhausted:
            return util.EXIT_BUDGET
        return util.EXIT_PASS

    def to_json(self):
        return {
            "suite": self.name,
            "checks": [r._asdict() for r in self.records],
            "summary": {state: self.count(state) for state in status.STATUSES},
            "budget_exhausted": self.budget_exhausted,
            "exit_code": self.exit_code,
        }


class Suite(object, metaclass=abc.ABCMeta):
    """
    Suite Class.

    A suite is a named, ordered list of :class:`Check` objects. Check ids
    are prefixed with the suite name and only ever appended to.
    """

    def __init__(self, config=None):
        """
        Initialize code for all :ref:`Suite` classes.

        :param config: An instance of a springer_lab config.
        :returns: None
        """
        self._config = config

    @property
    @abc.abstractmethod
    def name(self):  # pragma: no cover
        """
        Name of the suite and returns a string.

        :returns: str
        """
        pass

    @abc.abstractmethod
    def checks(self):  # pragma: no cover
        """
        Checks of the suite and returns a list of :class:`Check`.

        :returns: list
        """
        pass

    @property
    def description(self):
        doc = (self.__class__.__doc__ or "").strip()
        return doc.splitlines()[0] if doc else ""

    def check(self, name, claim, func):
        return Check("{}.{}".format(self.name, name), claim, func)

    def run(self, config=None, budget=None):
        """
        Execute every check in order and returns a :class:`SuiteReport`.

        Once the budget is exhausted the remaining checks are recorded as
        skipped without running.

        :param config: Config passed to the check functions.
        :param budget: A :class:`Budget`; None means unlimited.
        :return: SuiteReport
        """
        config = config or self._config
        budget = budget or Budget()
        timings = bool(config and config.timings)
        records = []
        for check in self.checks():
            if budget.exhausted:
                LOG.warning("Budget exhausted, skipping %s", check.id)
                records.append(
                    CheckRecord(
                        check.id,
                        check.claim,
                        status.SKIPPED,
                        None,
                        {"skipped": "budget exhausted"},
                        None,
                    )
                )
                continue
            if config and config.debug:
                LOG.info("Running %s", check.id)
            start = time.perf_counter()
            result = _execute(check, config)
            runtime_ms = int((time.perf_counter() - start) * 1000)
            record = CheckRecord(
                check.id,
                check.claim,
                result.status,
                result.expected,
                result.actual,
                runtime_ms if timings else None,
            )
            _log_record(record)
            records.append(record)
        return SuiteReport(self.name, records, budget.tripped)

    def print_matrix(self):
        """Print the checks of the suite as a tree through ``LOG.out``."""
        LOG.info("Check matrix")
        tree = (
            self.name,
            [("{}  {}".format(c.id, c.claim), []) for c in self.checks()],
        )
        tf = tree_format.format_tree(
            tree,
            format_node=operator.itemgetter(0),
            get_children=operator.itemgetter(1),
        )
        LOG.out(tf)
        LOG.out("")

    def __eq__(self, other):
        return str(self) == str(other)

    def __lt__(self, other):
        return str.__lt__(str(self), str(other))

    def __hash__(self):
        return self.name.__hash__()

    def __str__(self):
        return self.name

    def __repr__(self):
        return self.name


def _execute(check, config):
    try:
        result = check.func(config)
    except gf2k.ResourceLimitError as e:
        LOG.warning("%s hit a resource limit: %s", check.id, e.message)
        return Outcome(None, e.to_dict(), status.SKIPPED)
    except util.SpringerLabError as e:
        return Outcome(None, e.to_dict(), status.FAIL)
    if isinstance(result, Outcome):
        return result
    return outcome(*result)


def _log_record(record):
    if record.status == status.PASS:
        LOG.success("%s passed", record.id)
    elif record.status == status.FAIL:
        LOG.error(
            "%s failed: expected %s, got %s", record.id, record.expected, record.actual
        )
    else:
        LOG.warning("%s skipped", record.id)
