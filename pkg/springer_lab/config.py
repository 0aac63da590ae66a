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
"""Config Module."""

import os

import numpy as np

from springer_lab import logger
from springer_lab import util
from springer_lab.model import schema

LOG = logger.get_logger(__name__)
SPRINGER_LAB_DEBUG = logger.to_bool(os.environ.get("SPRINGER_LAB_DEBUG", "False"))
SPRINGER_LAB_JOBS = os.environ.get("SPRINGER_LAB_JOBS")
SPRINGER_LAB_CONFIG = ".config/springer-lab/config.yml"

# guards switched off by --unsafe-limits; the field degree is a hard bound
UNSAFE_LIMITS = ("max_group_order", "max_flag_count", "max_subspace_count")


class ConfigError(util.SpringerLabError):
    """The merged configuration failed schema validation."""

    code = "invalid_config"


# https://stackoverflow.com/questions/16017397/injecting-function-call-after-init-with-decorator  # noqa
class NewInitCaller(type):
    """NewInitCaller."""

    def __call__(cls, *args, **kwargs):
        obj = type.__call__(cls, *args, **kwargs)
        obj.after_init()
        return obj


class Config(object, metaclass=NewInitCaller):
    """
    Config Class.

    Settings are merged from the built-in defaults, an optional YAML base
    config and the command line, in that order, and validated with
    :mod:`springer_lab.model.schema`. The config owns the one seeded
    random generator every randomized step draws from.
    """

    def __init__(self, args={}, command_args={}):
        """
        Initialize a new config class and returns None.

        :param args: An optional dict of global options from the CLI.
        :param command_args: An optional dict of options passed to the
         subcommand from the CLI.
        :returns: None
        """
        self.args = args
        self.command_args = command_args
        self.config = self._combine()
        self._rng = None

    def after_init(self):
        self._validate()

    @property
    def debug(self):
        return bool(self.config["debug"])

    @property
    def timings(self):
        return bool(self.config["timings"])

    @property
    def subcommand(self):
        return self.command_args.get("subcommand")

    @property
    def seed(self):
        return self.config["seed"]

    @property
    def jobs(self):
        return self.config["jobs"]

    @property
    def budget_seconds(self):
        return self.config["budget_seconds"]

    @property
    def unsafe_limits(self):
        return self.config["unsafe_limits"]

    @property
    def limits(self):
        limits = dict(self.config["limits"])
        if self.unsafe_limits:
            for name in UNSAFE_LIMITS:
                limits[name] = None
        return limits

    @property
    def fibers(self):
        return self.config["fibers"]

    @property
    def sampling(self):
        return self.config["sampling"]

    @property
    def rng(self):
        """The seeded :class:`numpy.random.Generator` of this run."""
        if self._rng is None:
            self._rng = np.random.default_rng(self.seed)
        return self._rng

    def reseed(self):
        self._rng = None

    def check_field_degree(self, k):
        """Abort with exit 65 when ``k`` exceeds the field degree guard."""
        bound = self.limits["max_field_degree"]
        if k > bound:
            util.sysexit_with_error(
                ConfigError(
                    "Field degree {} exceeds the limit {}".format(k, bound),
                    detail={"k": k, "max_field_degree": bound},
                )
            )

    def _combine(self):
        """
        Perform a prioritized recursive merge of the config sources.

        1. Loads the springer_lab defaults.
        2. Loads a base config (if provided) and merges ontop of defaults.
        3. Merges the non-empty command line options.

        :return: dict
        """
        defaults = self._get_defaults()
        base_config = self.args.get("base_config")
        if base_config and os.path.exists(base_config):
            defaults = util.merge_dicts(defaults, util.safe_load_file(base_config))

        overrides = {
            key: value
            for key, value in self.args.items()
            if key != "base_config" and value is not None
        }
        return util.merge_dicts(defaults, overrides)

    def _get_defaults(self):
        jobs = SPRINGER_LAB_JOBS
        if jobs is not None:
            try:
                jobs = int(jobs)
            except ValueError:
                # left as a string for the schema to reject
                pass
        return {
            "seed": 0,
            "jobs": 1 if jobs is None else jobs,
            "budget_seconds": None,
            "unsafe_limits": False,
            "debug": SPRINGER_LAB_DEBUG,
            "timings": False,
            "limits": {
                "max_group_order": 10 ** 7,
                "max_flag_count": 10 ** 7,
                "max_field_degree": 16,
                "max_subspace_count": 10 ** 6,
            },
            "fibers": {"q_values": [2, 4, 8, 16], "retry_cap": 16},
            "sampling": {"inclusion_samples": 1000},
        }

    def _validate(self):
        LOG.debug("Validating config.")

        errors = schema.validate(self.config)
        if errors:
            util.sysexit_with_error(
                ConfigError("Failed to validate config.", detail=errors)
            )

        LOG.debug("Validation completed successfully.")
