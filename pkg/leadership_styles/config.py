# config.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Run configuration. The file is one flat JSON document; it is read with
# the YAML loader, JSON being a subset of YAML.


import os

import yaml

from leadership_styles.common import DEFAULT_FOLDS, DEFAULT_GRID, \
    SUPPORTED_LANGUAGES
from leadership_styles.errors import ConfigError
from leadership_styles.logging import logger

FILTER_NAMES = ("duplicates", "language", "negative_lexicon")


class RunConfig(object):
    """
    Settings shared by every command.

    Attributes:
        language (str): language code of the corpus, "it" or "en"
        stopword_path (str): optional stopword override file
        grid (list): (C, gamma) pairs tried by the calibration
        folds (int): cross-validation folds, at least 2
        seed (int): seed for fold assignment and sampling
        min_df (int): minimum document frequency kept in the vocabulary
        filters (list): enabled corpus filters, in application order
        n_jobs (int): worker processes for the per-label calibrations
        tol (float): KKT tolerance of the SMO solver
        eps (float): minimum multiplier step of the SMO solver
        max_passes (int): solver guard, in passes over the training set
        include_none_in_metrics (bool): NONE takes part in micro/macro F1
        train_none_model (bool): also train a binary NONE classifier
        period_boundaries (list): RFC 3339 instants splitting the periods
        duplicate_min_authors (int): distinct other authors that make a
            repeated text a bot duplicate
        negative_lexicon_path (str): word list for the negative_lexicon filter
        score_min (float), score_max (float): range of the factor scores
    """

    DEFAULTS = {
        "language": "it",
        "stopword_path": None,
        "grid": [list(point) for point in DEFAULT_GRID],
        "folds": DEFAULT_FOLDS,
        "seed": 0,
        "min_df": 1,
        "filters": [],
        "n_jobs": 1,
        "tol": 1e-3,
        "eps": 1e-12,
        "max_passes": 10000,
        "include_none_in_metrics": True,
        "train_none_model": False,
        "period_boundaries": [],
        "duplicate_min_authors": 3,
        "negative_lexicon_path": None,
        "score_min": 0.0,
        "score_max": 4.0,
    }

    def __init__(self, **kwargs):
        unknown = sorted(set(kwargs) - set(self.DEFAULTS))
        if unknown:
            raise ConfigError("unknown configuration keys: {}".format(
                ", ".join(unknown)
            ))

        for key, default in self.DEFAULTS.items():
            setattr(self, key, kwargs.get(key, default))

        self.grid = [tuple(point) for point in self.grid]
        self.filters = list(self.filters)
        self.period_boundaries = list(self.period_boundaries)
        self.validate()

    def validate(self):
        if self.language not in SUPPORTED_LANGUAGES:
            raise ConfigError("unsupported language '{}'".format(self.language))

        if not self.grid:
            raise ConfigError("the calibration grid is empty")

        for point in self.grid:
            if len(point) != 2 or not all(_is_number(v) and v > 0 for v in point):
                raise ConfigError(
                    "grid points must be (C, gamma) pairs of positive numbers, "
                    "got {}".format(list(point))
                )

        _check_int("folds", self.folds, 2)
        _check_int("seed", self.seed, None)
        _check_int("min_df", self.min_df, 1)
        _check_int("n_jobs", self.n_jobs, 1)
        _check_int("max_passes", self.max_passes, 1)
        _check_int("duplicate_min_authors", self.duplicate_min_authors, 1)

        for name in ("tol", "eps"):
            value = getattr(self, name)
            if not _is_number(value) or value <= 0:
                raise ConfigError("{} must be a positive number".format(name))

        for name in self.filters:
            if name not in FILTER_NAMES:
                raise ConfigError("unknown filter '{}'".format(name))

        if "negative_lexicon" in self.filters and not self.negative_lexicon_path:
            raise ConfigError(
                "the negative_lexicon filter needs negative_lexicon_path"
            )

        if not (_is_number(self.score_min) and _is_number(self.score_max)) \
                or self.score_min >= self.score_max:
            raise ConfigError("score_min must be lower than score_max")

    def as_dict(self):
        data = dict((key, getattr(self, key)) for key in self.DEFAULTS)
        data["grid"] = [list(point) for point in self.grid]
        return data


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError("{} must be an integer".format(name))
    if minimum is not None and value < minimum:
        raise ConfigError("{} must be at least {}".format(name, minimum))


def load_config(path=None, **overrides):
    """
    Load the run configuration.

    Args:
        path (str): the JSON config file, may be None
        overrides: values taking precedence over the file (CLI flags),
            None values are ignored

    Returns:
        RunConfig

    Raises:
        ConfigError: the file is not a flat JSON object or holds
            invalid values
    """

    data = {}

    if path is None:
        logger.info("No configuration file given, using defaults")
    elif not os.path.exists(path):
        logger.warn(
            "Configuration file '{}' not found, using defaults".format(path)
        )
    else:
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError("cannot parse configuration '{}': {}".format(
                path, " ".join(str(e).split())
            ))

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError(
                "configuration '{}' must be a JSON object".format(path)
            )
        for key, value in data.items():
            if isinstance(value, dict):
                raise ConfigError(
                    "configuration key '{}' must not be nested".format(key)
                )

    data.update((k, v) for k, v in overrides.items() if v is not None)
    return RunConfig(**data)
