# model_io.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Saving and loading trained models as a single JSON document:
#
#   {"version": 1, "idf_formula": "smoothed_ln_plus1", "language": "it",
#    "vocabulary": [[stem, df], ...], "n_docs": N,
#    "models": {"SYM": {"c": .., "gamma": .., "bias": .., "dim": ..,
#                       "support": [[[indices], [values], coef], ...]}, ...},
#    "chosen_params": {"SYM": [C, gamma], ...},
#    "cv_table": {"SYM": [[C, gamma, mean F1], ...], ...},
#    "none_model": {...}}
#
# Floats are written with repr, which reads back to the same double.


import json

from leadership_styles.classifier import MultiLabelModel
from leadership_styles.common import IDF_FORMULA, MODEL_FORMAT_VERSION
from leadership_styles.errors import ModelFormatError, ModelVersionError
from leadership_styles.features import SparseVector, Vocabulary
from leadership_styles.file_operations import read_file_contents, write_json
from leadership_styles.labels import AREA_LABELS, LABEL_ORDER, Label
from leadership_styles.logging import logger
from leadership_styles.svm import BinarySvmModel, KernelParams


def _model_to_dict(model):
    return {
        "c": model.c,
        "gamma": model.kernel.gamma,
        "bias": model.bias,
        "dim": model.dim,
        "support": [
            [vector.indices.tolist(), vector.values.tolist(), float(coef)]
            for vector, coef in zip(model.support_vectors, model.dual_coefs)
        ],
    }


def _model_from_dict(data):
    support = data["support"]
    vectors = [SparseVector(indices, values, data["dim"])
               for indices, values, _ in support]
    coefs = [float(coef) for _, _, coef in support]
    return BinarySvmModel(vectors, coefs, data["bias"],
                          KernelParams(data["gamma"]), data["c"], data["dim"])


def model_to_dict(model):
    """ The JSON-ready form of a MultiLabelModel, keys in a fixed order. """

    data = {
        "version": MODEL_FORMAT_VERSION,
        "idf_formula": IDF_FORMULA,
        "language": model.language,
        "vocabulary": [[stem, df] for stem, df in model.vocabulary.as_pairs()],
        "n_docs": model.vocabulary.n_docs,
        "models": dict(
            (label.value, _model_to_dict(model.area_models[label]))
            for label in AREA_LABELS
        ),
        "chosen_params": dict(
            (label.value, list(model.chosen_params[label]))
            for label in LABEL_ORDER if label in model.chosen_params
        ),
        "cv_table": dict(
            (label.value, [[c, gamma, score]
                           for (c, gamma), score in model.cv_tables[label]])
            for label in LABEL_ORDER if label in model.cv_tables
        ),
    }
    if model.none_model is not None:
        data["none_model"] = _model_to_dict(model.none_model)
    return data


def model_from_dict(data):
    """
    Rebuild a MultiLabelModel.

    Raises:
        ModelVersionError: the document has another format version
        ModelFormatError: anything else is missing or malformed
    """

    if not isinstance(data, dict) or "version" not in data:
        raise ModelFormatError("not a model document")
    if data["version"] != MODEL_FORMAT_VERSION:
        raise ModelVersionError(data["version"], MODEL_FORMAT_VERSION)
    if data.get("idf_formula") != IDF_FORMULA:
        raise ModelFormatError("unknown idf formula '{}'".format(
            data.get("idf_formula")))

    try:
        vocabulary = Vocabulary(
            [(stem, int(df)) for stem, df in data["vocabulary"]], data["n_docs"]
        )
        area_models = dict(
            (label, _model_from_dict(data["models"][label.value]))
            for label in AREA_LABELS
        )
        chosen_params = dict(
            (Label(name), (float(point[0]), float(point[1])))
            for name, point in data["chosen_params"].items()
        )
        cv_tables = dict(
            (Label(name), [((float(c), float(gamma)), float(score))
                           for c, gamma, score in rows])
            for name, rows in data.get("cv_table", {}).items()
        )
        none_model = None
        if data.get("none_model") is not None:
            none_model = _model_from_dict(data["none_model"])

        return MultiLabelModel(vocabulary, area_models, chosen_params,
                               none_model, cv_tables, data.get("language"))
    except ModelFormatError:
        raise
    except Exception as exc:
        raise ModelFormatError("malformed model: {}".format(exc))


def save_model(model, path):
    write_json(path, model_to_dict(model))
    logger.info("Model saved to {}".format(path))


def load_model(path):
    """
    Raises:
        ModelFormatError: the file is not valid JSON (e.g. truncated) or
            not a model
        ModelVersionError: the file has another format version
    """

    try:
        data = json.loads(read_file_contents(path))
    except ValueError as exc:
        raise ModelFormatError("corrupt model file {}: {}".format(path, exc))

    model = model_from_dict(data)
    logger.debug("Model loaded from {}".format(path))
    return model
