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

import copy

import pytest

from springer_lab import config
from springer_lab import util


@pytest.fixture
def _config(request):
    d = copy.deepcopy(config.Config({}).config)
    if hasattr(request, "param"):
        d = util.merge_dicts(d, request.getfixturevalue(request.param))

    return d


@pytest.fixture
def _fiber_document():
    return {
        "N": 2,
        "x": [[0, 1], [0, 0]],
        "v": [1, 0],
        "m1": 1,
        "variant": "restricted",
        "q_values": [2, 4, 8],
    }


@pytest.fixture
def _classify_document():
    return {
        "context": {"N": 2, "field": "gf2^1"},
        "x": {"field": "gf2^1", "rows": [[0, 1], [0, 0]]},
        "v": [1, 0],
        "M": {"field": "gf2^1", "rows": [[1, 0]]},
    }
