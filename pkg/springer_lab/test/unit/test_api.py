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

import pytest

from springer_lab import api
from springer_lab import config
from springer_lab import util


def test_builtin_suites_in_fixed_order():
    x = ["identities", "orbit-counts", "infinite-family", "fibers", "combinatorics"]

    assert x == [s.name for s in api.suites()][:5]


def test_suites_are_addressable_by_name():
    suites = api.suites()

    assert "fibers" == suites["fibers"].name
    assert suites[0] is suites["identities"]
    assert suites.get("missing", None) is None


def test_suite_names_include_all():
    assert "all" == api.suite_names()[-1]
    assert "identities" in api.suite_names()


def test_get_suite():
    assert "combinatorics" == api.get_suite("combinatorics").name


def test_get_suite_unknown_raises():
    with pytest.raises(api.UnknownSuiteError) as e:
        api.get_suite("bogus")

    assert util.EXIT_USAGE == e.value.exit_code
    assert "all" in e.value.detail["allowed"]


def test_user_list_map():
    x = api.UserListMap()
    x.append("foo")

    assert "foo" == x[0]
    assert "foo" == x["foo"]
    assert "foo" == x.get("foo", None)


def test_run_suite(patched_suites, patched_logger_info):
    report = api.run_suite("arithmetic", config.Config({}))

    assert "arithmetic" == report.name
    assert 5 == len(report.records)
    assert util.EXIT_FAIL == report.exit_code
    patched_logger_info.assert_any_call("Running suite '%s'", "arithmetic")


def test_run_suite_all(patched_suites):
    report = api.run_suite("all", config.Config({}))

    assert "all" == report.name
    assert ["arithmetic.equal"] == [r.id for r in report.records][:1]


def test_run_suite_unknown_raises(patched_suites):
    with pytest.raises(api.UnknownSuiteError):
        api.run_suite("bogus", config.Config({}))
