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
"""Schema Validation Module."""

import re

import cerberus
import cerberus.errors

from springer_lab import fibers

FIELD_NAME = r"^gf2\^([1-9]|1[0-6])$"

limit_schema = {"type": "integer", "min": 1, "nullable": True}

base_schema = {
    "seed": {"type": "integer", "min": 0},
    "jobs": {"type": "integer", "min": 1},
    "budget_seconds": {"type": "number", "min": 0, "nullable": True},
    "unsafe_limits": {"type": "boolean"},
    "debug": {"type": "boolean"},
    "timings": {"type": "boolean"},
    "limits": {
        "type": "dict",
        "schema": {
            "max_group_order": limit_schema,
            "max_flag_count": limit_schema,
            "max_field_degree": {"type": "integer", "min": 1, "max": 16},
            "max_subspace_count": limit_schema,
        },
    },
    "fibers": {
        "type": "dict",
        "schema": {
            "q_values": {
                "type": "list",
                "minlength": 1,
                "ascending": True,
                "schema": {"type": "integer", "power_of_two": True},
            },
            "retry_cap": {"type": "integer", "min": 1},
        },
    },
    "sampling": {
        "type": "dict",
        "schema": {"inclusion_samples": {"type": "integer", "min": 0}},
    },
}

matrix_schema = {
    "type": "dict",
    "required": True,
    "schema": {
        "field": {"type": "string", "regex": FIELD_NAME, "required": True},
        "rows": {
            "type": "list",
            "required": True,
            "square": True,
            "schema": {"type": "list", "schema": {"type": "integer", "min": 0}},
        },
    },
}

context_schema = {
    "type": "dict",
    "required": True,
    "schema": {
        "N": {"type": "integer", "min": 1, "required": True},
        "field": {"type": "string", "regex": FIELD_NAME, "required": True},
    },
}

vector_schema = {
    "type": "list",
    "required": True,
    "schema": {"type": "integer", "min": 0},
}

classify_schema = {
    "context": context_schema,
    "x": matrix_schema,
    "v": vector_schema,
    "M": {
        "type": "dict",
        "required": True,
        "schema": {
            "field": {"type": "string", "regex": FIELD_NAME, "required": True},
            "rows": {
                "type": "list",
                "required": True,
                "schema": {"type": "list", "schema": {"type": "integer", "min": 0}},
            },
        },
    },
}

fiber_schema = {
    "N": {"type": "integer", "min": 2, "required": True, "even": True},
    "x": {
        "type": "list",
        "required": True,
        "square": True,
        "schema": {"type": "list", "schema": {"type": "integer", "allowed": [0, 1]}},
    },
    "v": {
        "type": "list",
        "required": True,
        "schema": {"type": "integer", "allowed": [0, 1]},
    },
    "m1": {"type": "integer", "min": 0},
    "variant": {"type": "string", "allowed": list(fibers.VARIANTS)},
    "q_values": base_schema["fibers"]["schema"]["q_values"],
    "degree": {"type": "integer", "min": 0, "nullable": True},
}


class Validator(cerberus.Validator):
    """Validator Class."""

    def __init__(self, *args, **kwargs):
        """Construct Validator."""
        super(Validator, self).__init__(*args, **kwargs)

    def _validate_power_of_two(self, power_of_two, field, value):
        """Field sizes are powers of two.

        The rule's arguments are validated against this schema:
        {'type': 'boolean'}
        """
        if power_of_two and isinstance(value, int):
            if value < 2 or value & (value - 1):
                self._error(field, "{} is not a power of two".format(value))

    def _validate_ascending(self, ascending, field, value):
        """Strictly increasing list.

        The rule's arguments are validated against this schema:
        {'type': 'boolean'}
        """
        if ascending and isinstance(value, list):
            if any(not a < b for a, b in zip(value, value[1:])):
                self._error(field, "must be strictly increasing")

    def _validate_square(self, square, field, value):
        """Rows of equal length matching their count.

        The rule's arguments are validated against this schema:
        {'type': 'boolean'}
        """
        if square and isinstance(value, list):
            if any(not isinstance(r, list) or len(r) != len(value) for r in value):
                self._error(field, "must be a square matrix")

    def _validate_even(self, even, field, value):
        """Even integer.

        The rule's arguments are validated against this schema:
        {'type': 'boolean'}
        """
        if even and isinstance(value, int) and value % 2:
            self._error(field, "must be even")


def _run(document, schema, allow_unknown=False):
    v = Validator(allow_unknown=allow_unknown)
    v.validate(document, schema)

    return v.errors


def validate(c):
    """Perform schema validation of a merged config."""
    return _run(c, base_schema)


def validate_classify(doc):
    """Validate a ``classify`` input document."""
    errors = _run(doc, classify_schema)
    if not errors:
        size = doc["context"]["N"]
        if len(doc["x"]["rows"]) != size:
            errors = {"x": ["must be {0}x{0}".format(size)]}
        elif len(doc["v"]) != size:
            errors = {"v": ["must have length {}".format(size)]}
        elif any(len(r) != size for r in doc["M"]["rows"]):
            errors = {"M": ["rows must have length {}".format(size)]}
    return errors


def validate_fiber(doc):
    """Validate a ``fiber`` input document."""
    errors = _run(doc, fiber_schema)
    if not errors:
        size = doc["N"]
        if len(doc["x"]) != size:
            errors = {"x": ["must be {0}x{0}".format(size)]}
        elif len(doc["v"]) != size:
            errors = {"v": ["must have length {}".format(size)]}
    return errors


def field_degree(name):
    match = re.match(FIELD_NAME, name)
    return int(match.group(1)) if match else None
