# test_model_io.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#

import json

import pytest

from leadership_styles.classifier import classify_many, train_multilabel
from leadership_styles.common import MODEL_FORMAT_VERSION
from leadership_styles.errors import ModelFormatError, ModelVersionError
from leadership_styles.features import vectorize_many
from leadership_styles.labels import AREA_LABELS, Label
from leadership_styles.model_io import load_model, model_to_dict, save_model
from leadership_styles.svm import decision_values
from leadership_styles.textprep import Preprocessor

from tests.leadership_styles.helpers import SMALL_GRID, generate_docs, \
    synthetic_training


def unseen_docs():
    preprocess = Preprocessor("en")
    return [preprocess(text) for text, _ in generate_docs(100, seed=77)]


def test_round_trip_classifies_identically(tmp_path):
    _, _, model = synthetic_training()
    path = str(tmp_path / "model.json")

    save_model(model, path)
    loaded = load_model(path)

    unseen = unseen_docs()
    assert classify_many(loaded, unseen) == classify_many(model, unseen)

    assert loaded.vocabulary == model.vocabulary
    assert loaded.chosen_params == model.chosen_params
    assert loaded.cv_tables == model.cv_tables
    assert loaded.language == "en"
    vectors = vectorize_many(unseen, model.vocabulary)
    for label in AREA_LABELS:
        assert loaded.area_models[label] == model.area_models[label]
        assert decision_values(loaded.area_models[label], vectors) == \
            decision_values(model.area_models[label], vectors)


def test_round_trip_with_none_model(tmp_path):
    _, _, model = synthetic_training(train_none_model=True)
    path = str(tmp_path / "model.json")

    save_model(model, path)
    loaded = load_model(path)
    assert loaded.none_model == model.none_model
    assert loaded.chosen_params[Label.NONE] == model.chosen_params[Label.NONE]


def test_saved_bytes_are_deterministic(tmp_path):
    _, _, model = synthetic_training()
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")

    save_model(model, first)
    save_model(load_model(first), second)
    with open(first, "rb") as a, open(second, "rb") as b:
        assert a.read() == b.read()


def test_training_twice_saves_identical_bytes(tmp_path):
    preprocess = Preprocessor("en")
    docs = [(preprocess(text), labels) for text, labels in generate_docs(80, seed=21)]

    paths = []
    for run in range(2):
        model = train_multilabel(docs, grid=SMALL_GRID, folds=3, seed=5,
                                 language="en")
        paths.append(str(tmp_path / "run{}.json".format(run)))
        save_model(model, paths[-1])

    with open(paths[0], "rb") as a, open(paths[1], "rb") as b:
        assert a.read() == b.read()


def test_file_layout(tmp_path):
    _, _, model = synthetic_training()
    data = model_to_dict(model)

    assert data["version"] == MODEL_FORMAT_VERSION
    assert data["idf_formula"] == "smoothed_ln_plus1"
    assert data["n_docs"] == 200
    assert list(data["models"]) == ["SYM", "BEH", "POL", "STR"]
    assert "none_model" not in data
    indices, values, coef = data["models"]["SYM"]["support"][0]
    assert len(indices) == len(values)
    assert isinstance(coef, float)


def test_truncated_file(tmp_path):
    _, _, model = synthetic_training()
    path = tmp_path / "model.json"
    save_model(model, str(path))

    content = path.read_text()
    path.write_text(content[:len(content) // 2])
    with pytest.raises(ModelFormatError):
        load_model(str(path))


def test_future_version(tmp_path):
    _, _, model = synthetic_training()
    data = model_to_dict(model)
    data["version"] = MODEL_FORMAT_VERSION + 1
    path = tmp_path / "model.json"
    path.write_text(json.dumps(data))

    with pytest.raises(ModelVersionError) as info:
        load_model(str(path))
    message = str(info.value)
    assert str(MODEL_FORMAT_VERSION + 1) in message
    assert str(MODEL_FORMAT_VERSION) in message


@pytest.mark.parametrize("document", [
    "[]",
    json.dumps({"version": MODEL_FORMAT_VERSION}),
    json.dumps({"version": MODEL_FORMAT_VERSION, "idf_formula": "raw"}),
])
def test_malformed_documents(tmp_path, document):
    path = tmp_path / "model.json"
    path.write_text(document)
    with pytest.raises(ModelFormatError):
        load_model(str(path))
