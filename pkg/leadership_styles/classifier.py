# classifier.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# One-vs-rest classification over the four leadership areas, with NONE
# assigned when no area classifier fires.


import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from sklearn.metrics import f1_score
from sklearn.model_selection import StratifiedKFold

from leadership_styles.common import DEFAULT_FOLDS, DEFAULT_GRID
from leadership_styles.errors import FoldError, InsufficientDataError, \
    TrainingError
from leadership_styles.features import build_vocabulary, vectorize_many
from leadership_styles.labels import AREA_LABELS, Label, LabelSet
from leadership_styles.logging import logger
from leadership_styles.svm import TrainConfig, model_from_solution, \
    predict_many, solve_smo, squared_distances


class MultiLabelModel(object):
    """
    Args:
        vocabulary (Vocabulary): the training vocabulary
        area_models (dict): Label -> BinarySvmModel for the four areas
        chosen_params (dict): Label -> (C, gamma)
        none_model (BinarySvmModel): optional binary NONE classifier
        cv_tables (dict): Label -> list of ((C, gamma), mean F1)
        language (str): language code of the training corpus
    """

    def __init__(self, vocabulary, area_models, chosen_params, none_model=None,
                 cv_tables=None, language=None):
        missing = [label.value for label in AREA_LABELS if label not in area_models]
        if missing:
            raise TrainingError("missing area models: {}".format(", ".join(missing)))

        for model in list(area_models.values()) + [none_model]:
            if model is not None and model.dim != len(vocabulary):
                raise TrainingError(
                    "model dimension {} does not match the vocabulary size {}"
                    .format(model.dim, len(vocabulary)))

        self.vocabulary = vocabulary
        self.area_models = dict(area_models)
        self.chosen_params = dict(chosen_params)
        self.none_model = none_model
        self.cv_tables = dict(cv_tables or {})
        self.language = language


def binary_f1(predicted, actual):
    # no positives on either side scores 1.0
    return float(f1_score(
        np.asarray(actual, dtype=int), np.asarray(predicted, dtype=int),
        zero_division=1.0
    ))


def stratified_folds(y, folds, seed, label=None):
    """
    Stratified k-fold split of binary labels.

    Args:
        y (sequence): +1 / -1 labels
        folds (int)
        seed (int)
        label (str): name of the label being split, for the errors

    Returns:
        list: (train indices, test indices) pairs

    Raises:
        FoldError: a class has fewer members than folds, or a fold ends
            up without one of the classes
    """

    y = np.asarray(y)
    if folds < 2:
        raise FoldError("at least 2 folds are needed, got {}".format(folds), label)

    for cls in (1, -1):
        members = int(np.sum(y == cls))
        if members < folds:
            raise FoldError(
                "{} {} examples cannot fill {} folds".format(
                    members, "positive" if cls > 0 else "negative", folds),
                label
            )

    splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
    splits = list(splitter.split(np.zeros(len(y)), y))

    for number, (train, test) in enumerate(splits, 1):
        for part, name in ((train, "training"), (test, "test")):
            if len(np.unique(y[part])) < 2:
                raise FoldError("fold {} {} part lost a class".format(number, name),
                                label)

    return splits


def grid_search(vectors, y, grid=DEFAULT_GRID, folds=DEFAULT_FOLDS, seed=0,
                distances=None, solver_options=None, label=None):
    """
    Pick (C, gamma) by stratified k-fold cross-validation.

    The score of a grid point is the mean F1 of the positive class over
    the folds. Ties go to the smaller C, then the smaller gamma.

    Args:
        vectors (list of SparseVector)
        y (sequence): +1 / -1 labels
        grid (list): (C, gamma) pairs
        folds (int)
        seed (int): seed of the fold assignment
        distances (numpy.ndarray): optional precomputed squared distances
        solver_options (dict): tol, eps, max_passes for TrainConfig
        label (str): name of the label being calibrated, for the errors

    Returns:
        tuple = ((C, gamma), list of ((C, gamma), mean F1)): the best point
            and the table, in grid order

    Raises:
        FoldError
    """

    grid = [(float(c), float(gamma)) for c, gamma in grid]
    if not grid:
        raise TrainingError("the grid is empty")

    y = np.asarray(y, dtype=np.float64)
    splits = stratified_folds(y, folds, seed, label)
    if distances is None:
        distances = squared_distances(vectors)
    options = dict(solver_options or {})

    scores = {}
    for gamma in _unique(g for _, g in grid):
        kernel = np.exp(-gamma * distances)
        for c in _unique(c for c, g in grid if g == gamma):
            cfg = TrainConfig(c, gamma, seed=seed, **options)
            fold_scores = []
            for train, test in splits:
                result = solve_smo(kernel[np.ix_(train, train)], y[train], cfg)
                values = kernel[np.ix_(test, train)] @ (result.alpha * y[train]) \
                    + result.bias
                fold_scores.append(binary_f1(values > 0, y[test] > 0))

            scores[(c, gamma)] = math.fsum(fold_scores) / len(fold_scores)
            logger.debug("grid point C={} gamma={}: mean F1 {:.4f}".format(
                c, gamma, scores[(c, gamma)]))

    table = [(point, scores[point]) for point in grid]
    best = max(grid, key=lambda point: (scores[point], -point[0], -point[1]))
    return best, table


def _unique(values):
    seen = []
    for value in values:
        if value not in seen:
            seen.append(value)
    return seen


def fit_binary(vectors, y, grid, folds, seed, distances, solver_options,
               label=None):
    """
    Calibrate one binary classifier and retrain it on all the data.

    Returns:
        tuple = ((C, gamma), table, BinarySvmModel)
    """

    best, table = grid_search(vectors, y, grid, folds, seed, distances,
                              solver_options, label)
    c, gamma = best
    cfg = TrainConfig(c, gamma, seed=seed, **dict(solver_options or {}))
    result = solve_smo(np.exp(-gamma * distances), y, cfg)
    model = model_from_solution(vectors, y, result, cfg, vectors[0].dim)
    return best, table, model


def _binary_targets(label_sets, label):
    return np.array([1.0 if label in labels else -1.0 for labels in label_sets])


def _check_positives(label_sets, label, folds):
    positives = sum(1 for labels in label_sets if label in labels)
    if positives < folds:
        raise InsufficientDataError(label.value, positives, folds)


def train_multilabel(docs, grid=DEFAULT_GRID, folds=DEFAULT_FOLDS, seed=0,
                     min_df=1, train_none_model=False, n_jobs=1,
                     solver_options=None, language=None):
    """
    Train the four one-vs-rest area classifiers.

    Each label gets its own (C, gamma) by grid_search and is then retrained
    on all the documents. The target of label L is +1 iff L is in the
    document's label set.

    Args:
        docs (list): (token list, LabelSet) pairs
        grid (list): (C, gamma) pairs
        folds (int): cross-validation folds, at least 2
        seed (int)
        min_df (int): vocabulary document frequency cutoff
        train_none_model (bool): also train a binary NONE classifier
        n_jobs (int): worker processes for the per-label calibrations
        solver_options (dict): tol, eps, max_passes
        language (str): recorded in the model

    Returns:
        MultiLabelModel

    Raises:
        InsufficientDataError: an area label has fewer than folds positives
    """

    if folds < 2:
        raise FoldError("at least 2 folds are needed, got {}".format(folds))
    if not docs:
        raise TrainingError("no training documents")

    tokens = [doc for doc, _ in docs]
    label_sets = [labels for _, labels in docs]

    targets = list(AREA_LABELS) + ([Label.NONE] if train_none_model else [])
    for label in targets:
        _check_positives(label_sets, label, folds)

    vocabulary = build_vocabulary(tokens, min_df)
    vectors = vectorize_many(tokens, vocabulary)
    distances = squared_distances(vectors)
    logger.info("Training on {} documents, {} terms".format(
        len(vectors), len(vocabulary)))

    jobs = [
        (vectors, _binary_targets(label_sets, label), grid, folds, seed,
         distances, solver_options, label.value)
        for label in targets
    ]

    if n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            futures = [executor.submit(fit_binary, *job) for job in jobs]
            fitted = [future.result() for future in futures]
    else:
        fitted = [fit_binary(*job) for job in jobs]

    area_models = {}
    chosen_params = {}
    cv_tables = {}
    none_model = None
    for label, (best, table, model) in zip(targets, fitted):
        logger.info("{}: C={} gamma={} ({} support vectors)".format(
            label.value, best[0], best[1], len(model.support_vectors)))
        chosen_params[label] = best
        cv_tables[label] = table
        if label == Label.NONE:
            none_model = model
        else:
            area_models[label] = model

    return MultiLabelModel(vocabulary, area_models, chosen_params, none_model,
                           cv_tables, language)


def classify_many(model, docs):
    """
    Label sets of several token lists; same results as classify.

    Returns:
        list of LabelSet
    """

    vectors = vectorize_many(docs, model.vocabulary)
    fired = dict(
        (label, predict_many(model.area_models[label], vectors))
        for label in AREA_LABELS
    )
    return [
        LabelSet.from_areas(label for label in AREA_LABELS if fired[label][i])
        for i in range(len(vectors))
    ]


def classify(model, doc):
    """
    The positive areas of a token list, or {NONE} when none fires.

    Returns:
        LabelSet
    """

    return classify_many(model, [doc])[0]


def compare_none_strategies(model, docs):
    """
    Agreement between the NONE fallback and the binary NONE classifier.

    Returns:
        float: fraction of docs on which "the fallback says NONE" equals
            "the NONE classifier fires"; 1.0 for no docs

    Raises:
        TrainingError: the model has no NONE classifier
    """

    if model.none_model is None:
        raise TrainingError("the model has no NONE classifier")
    if not docs:
        return 1.0

    fallback = [labels.is_none for labels in classify_many(model, docs)]
    binary = predict_many(model.none_model, vectorize_many(docs, model.vocabulary))
    agree = sum(1 for a, b in zip(fallback, binary) if a == b)
    return float(agree) / len(docs)
