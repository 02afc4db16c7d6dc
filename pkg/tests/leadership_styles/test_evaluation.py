# test_evaluation.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Multi-label metrics and annotator agreement

import random

import pytest

from leadership_styles.errors import IdMismatchError, LabelError, \
    LengthMismatchError
from leadership_styles.evaluation import binarize, cohen_kappa, evaluate, \
    fleiss_kappa, pairwise_kappa
from leadership_styles.labels import ALL_LABELS, AREA_LABELS, Label, LabelSet

SYM = LabelSet([Label.SYM])
POL = LabelSet([Label.POL])
NONE = LabelSet.none()


def random_label_sets(rng, n):
    sets = []
    for _ in range(n):
        areas = [label for label in AREA_LABELS if rng.random() < 0.3]
        sets.append(LabelSet.from_areas(areas))
    return sets


def test_perfect_prediction():
    gold = [SYM, POL, NONE, LabelSet.parse("SYM,BEH")]
    report = evaluate(gold, gold)

    assert report.subset_accuracy == 1.0
    assert report.micro_f1 == 1.0
    assert report.macro_f1 == 1.0


def test_identity_for_random_sets():
    rng = random.Random(0)
    for _ in range(20):
        gold = random_label_sets(rng, rng.randint(1, 15))
        report = evaluate(gold, gold)
        assert (report.subset_accuracy, report.micro_f1, report.macro_f1) == \
            (1.0, 1.0, 1.0)
        assert all(c.accuracy == 1.0 for c in report.per_label.values())


def test_subset_accuracy():
    gold = [SYM, POL, NONE, LabelSet.parse("SYM,POL")]
    preds = [SYM, POL, SYM, POL]
    assert evaluate(preds, gold).subset_accuracy == 0.5


def test_pooled_counts_fixture():
    report = evaluate([SYM, SYM], [SYM, POL], labels=(Label.SYM, Label.POL))

    sym = report.per_label[Label.SYM]
    pol = report.per_label[Label.POL]
    assert (sym.tp, sym.fp, sym.fn, sym.tn) == (1, 1, 0, 0)
    assert (pol.tp, pol.fp, pol.fn, pol.tn) == (0, 0, 1, 1)

    assert report.micro_f1 == 0.5
    assert sym.f1 == pytest.approx(2.0 / 3.0)
    assert pol.f1 == 0.0
    assert report.macro_f1 == pytest.approx(1.0 / 3.0)


def test_label_absent_everywhere_scores_one():
    report = evaluate([NONE] * 4, [NONE] * 4, labels=(Label.SYM,))
    counts = report.per_label[Label.SYM]

    assert (counts.tp, counts.fp, counts.fn, counts.tn) == (0, 0, 0, 4)
    assert counts.f1 == 1.0
    assert counts.precision == 1.0
    assert counts.recall == 1.0
    assert report.micro_f1 == 1.0
    assert report.macro_f1 == 1.0


def test_missed_label_scores_zero_f1():
    report = evaluate([NONE, NONE], [SYM, NONE], labels=(Label.SYM,))
    counts = report.per_label[Label.SYM]

    assert (counts.tp, counts.fp, counts.fn, counts.tn) == (0, 0, 1, 1)
    assert counts.recall == 0.0
    # nothing predicted: the empty precision counts as perfect
    assert counts.precision == 1.0
    assert counts.f1 == 0.0
    assert counts.accuracy == 0.5


def test_binarize_columns_follow_label_order():
    matrix = binarize([LabelSet.parse("POL,SYM"), NONE])
    assert matrix.tolist() == [[1, 0, 1, 0, 0], [0, 0, 0, 0, 1]]


def test_subset_match_implies_label_agreement():
    rng = random.Random(1)
    preds = random_label_sets(rng, 30)
    gold = [p if rng.random() < 0.5 else g
            for p, g in zip(preds, random_label_sets(rng, 30))]
    report = evaluate(preds, gold)

    assert 0.0 <= report.micro_f1 <= 1.0
    assert 0.0 <= report.macro_f1 <= 1.0
    for p, g in zip(preds, gold):
        if p == g:
            assert all((label in p) == (label in g) for label in ALL_LABELS)


def test_as_dict_shape():
    data = evaluate([SYM], [SYM]).as_dict()
    assert list(data["per_label"]) == ["SYM", "BEH", "POL", "STR", "NONE"]
    assert set(data["per_label"]["SYM"]) == {
        "accuracy", "precision", "recall", "f1", "tp", "fp", "fn", "tn"}


def test_length_mismatch():
    with pytest.raises(LengthMismatchError):
        evaluate([SYM], [SYM, POL])
    with pytest.raises(LengthMismatchError):
        evaluate([], [])


def annotations(pairs, label=Label.SYM):
    """ Two annotators from (yes/no, yes/no) pairs. """

    a, b = {}, {}
    for i, (in_a, in_b) in enumerate(pairs):
        key = "t{}".format(i)
        a[key] = LabelSet([label]) if in_a else LabelSet.none()
        b[key] = LabelSet([label]) if in_b else LabelSet.none()
    return a, b


def test_kappa_identical():
    a, _ = annotations([(True, False), (False, True), (True, True)])
    assert cohen_kappa(a, a, Label.SYM) == 1.0


def test_kappa_closed_form():
    pairs = [(True, True)] * 20 + [(True, False)] * 5 + \
        [(False, True)] * 10 + [(False, False)] * 15
    a, b = annotations(pairs)
    assert cohen_kappa(a, b, Label.SYM) == 0.4


def test_kappa_chance_agreement():
    pairs = [(True, True), (True, False)] * 5
    a, b = annotations(pairs)
    assert cohen_kappa(a, b, Label.SYM) == pytest.approx(0.0)


def test_kappa_is_symmetric():
    rng = random.Random(2)
    pairs = [(rng.random() < 0.4, rng.random() < 0.6) for _ in range(40)]
    a, b = annotations(pairs)
    assert cohen_kappa(a, b, Label.SYM) == pytest.approx(cohen_kappa(b, a, Label.SYM))


def test_kappa_label_never_used():
    a, b = annotations([(True, True), (False, False)])
    assert cohen_kappa(a, b, Label.STR) == 1.0


def test_kappa_id_mismatch():
    a = dict(("t{}".format(i), SYM) for i in range(8))
    b = dict(("u{}".format(i), SYM) for i in range(8))
    with pytest.raises(IdMismatchError) as info:
        cohen_kappa(a, b, Label.SYM)
    assert info.value.ids[:5] == ["t0", "t1", "t2", "t3", "t4"]


def test_pairwise_kappa_table():
    pairs = [(True, True), (False, True), (True, False), (False, False)]
    a, b = annotations(pairs)
    table = pairwise_kappa([("ann1", a), ("ann2", b), ("ann3", a)])

    assert list(table) == ["SYM", "BEH", "POL", "STR", "NONE"]
    assert sum(len(row) for row in table.values()) == 15
    assert table["SYM"]["ann1|ann3"] == 1.0
    assert table["SYM"]["ann1|ann2"] == pytest.approx(0.0)


def test_pairwise_kappa_needs_two():
    with pytest.raises(LabelError):
        pairwise_kappa([("ann1", {"t1": SYM})])


def test_fleiss_kappa():
    a, b = annotations([(True, True), (False, False), (True, True), (False, False)])
    assert fleiss_kappa([a, b, a], Label.SYM) == 1.0

    pairs = [(True, True)] * 20 + [(True, False)] * 5 + \
        [(False, True)] * 10 + [(False, False)] * 15
    a, b = annotations(pairs)
    kappa = fleiss_kappa([a, b], Label.SYM)
    assert -1.0 <= kappa <= 1.0
    assert kappa < 1.0
