# evaluation.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Multi-label evaluation metrics and inter-annotator agreement.


import itertools
import math

from sklearn.metrics import accuracy_score, cohen_kappa_score, f1_score, \
    multilabel_confusion_matrix, precision_recall_fscore_support
from sklearn.preprocessing import MultiLabelBinarizer

from leadership_styles.errors import IdMismatchError, LabelError, \
    LengthMismatchError
from leadership_styles.labels import ALL_LABELS, LABEL_ORDER

# a score whose denominator is empty counts as perfect, e.g. the F1 of a
# label absent from both sides
ZERO_DIVISION = 1.0


class LabelCounts(object):
    """
    Confusion counts and scores of one label over a list of label sets.

    Args:
        confusion: 2x2 matrix [[tn, fp], [fn, tp]] as returned by
            multilabel_confusion_matrix
        precision (float)
        recall (float)
        f1 (float)
    """

    def __init__(self, confusion, precision, recall, f1):
        (self.tn, self.fp), (self.fn, self.tp) = [
            [int(count) for count in row] for row in confusion
        ]
        self.precision = float(precision)
        self.recall = float(recall)
        self.f1 = float(f1)

    @property
    def total(self):
        return self.tp + self.fp + self.fn + self.tn

    @property
    def accuracy(self):
        return float(self.tp + self.tn) / self.total if self.total else 1.0

    def as_dict(self):
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
        }


class MetricsReport(object):
    """
    Attributes:
        subset_accuracy (float): fraction of exact label set matches
        micro_f1 (float): F1 of the counts pooled over the labels
        macro_f1 (float): unweighted mean of the per-label F1
        per_label (dict): Label -> LabelCounts
    """

    def __init__(self, subset_accuracy, micro_f1, macro_f1, per_label):
        self.subset_accuracy = subset_accuracy
        self.micro_f1 = micro_f1
        self.macro_f1 = macro_f1
        self.per_label = per_label

    def as_dict(self):
        return {
            "subset_accuracy": self.subset_accuracy,
            "micro_f1": self.micro_f1,
            "macro_f1": self.macro_f1,
            "per_label": dict(
                (label.value, self.per_label[label].as_dict())
                for label in LABEL_ORDER if label in self.per_label
            ),
        }


def binarize(label_sets):
    """
    Indicator matrix of label sets, one column per label in LABEL_ORDER.

    Returns:
        numpy.ndarray: shape (len(label_sets), 5), entries 0 or 1
    """

    binarizer = MultiLabelBinarizer(classes=[label.value for label in LABEL_ORDER])
    return binarizer.fit_transform(
        [[label.value for label in label_set] for label_set in label_sets]
    )


def evaluate(preds, gold, labels=ALL_LABELS):
    """
    Compare predicted label sets with the gold ones.

    Args:
        preds (list of LabelSet)
        gold (list of LabelSet)
        labels (sequence): the labels taking part in the per-label,
            micro and macro figures; all five by default

    Returns:
        MetricsReport

    Raises:
        LengthMismatchError: the lists differ in length or are empty
    """

    if len(preds) != len(gold):
        raise LengthMismatchError("{} predictions for {} gold label sets".format(
            len(preds), len(gold)))
    if not gold:
        raise LengthMismatchError("nothing to evaluate")
    if not labels:
        raise LabelError("at least one label must be evaluated")

    y_pred = binarize(preds)
    y_true = binarize(gold)
    # the five columns together determine the label set
    subset_accuracy = float(accuracy_score(y_true, y_pred))

    labels = list(labels)
    columns = [LABEL_ORDER.index(label) for label in labels]
    y_pred = y_pred[:, columns]
    y_true = y_true[:, columns]

    confusion = multilabel_confusion_matrix(y_true, y_pred)
    precision, recall, f1, _ = precision_recall_fscore_support(
        y_true, y_pred, average=None, zero_division=ZERO_DIVISION
    )
    per_label = dict(
        (label, LabelCounts(confusion[i], precision[i], recall[i], f1[i]))
        for i, label in enumerate(labels)
    )

    return MetricsReport(
        subset_accuracy,
        float(f1_score(y_true, y_pred, average="micro", zero_division=ZERO_DIVISION)),
        float(f1_score(y_true, y_pred, average="macro", zero_division=ZERO_DIVISION)),
        per_label,
    )


def _check_same_ids(a, b):
    if set(a) != set(b):
        raise IdMismatchError("annotation id sets differ",
                              set(a).symmetric_difference(b))
    if not a:
        raise LabelError("no annotated tweets")


def cohen_kappa(a, b, label):
    """
    Cohen's kappa of two annotators on the indicator "label is assigned".

    Args:
        a (dict): tweet id -> LabelSet, first annotator
        b (dict): tweet id -> LabelSet, second annotator
        label (Label)

    Returns:
        float: (p_o - p_e) / (1 - p_e), 1.0 when p_e = p_o = 1

    Raises:
        IdMismatchError: the annotators labelled different tweets
    """

    _check_same_ids(a, b)

    ids = sorted(a)
    a_yes = [int(label in a[tweet_id]) for tweet_id in ids]
    b_yes = [int(label in b[tweet_id]) for tweet_id in ids]

    # one value on both sides: p_e = 1, and then p_o = 1 too
    if len(set(a_yes) | set(b_yes)) == 1:
        return 1.0

    return float(cohen_kappa_score(a_yes, b_yes))


def pairwise_kappa(annotations, labels=ALL_LABELS):
    """
    Cohen's kappa for every pair of annotators and every label.

    Args:
        annotations (list): (annotator name, annotation dict) pairs

    Returns:
        dict: label value -> {"<name a>|<name b>": kappa}
    """

    if len(annotations) < 2:
        raise LabelError("at least two annotators are needed")

    table = {}
    for label in labels:
        row = {}
        for (name_a, a), (name_b, b) in itertools.combinations(annotations, 2):
            row["{}|{}".format(name_a, name_b)] = cohen_kappa(a, b, label)
        table[label.value] = row
    return table


def fleiss_kappa(annotations, label):
    """
    Fleiss' kappa of several annotators on the indicator "label is assigned".

    Args:
        annotations (list of dict): one tweet id -> LabelSet dict per annotator
        label (Label)

    Returns:
        float
    """

    if len(annotations) < 2:
        raise LabelError("at least two annotators are needed")
    for other in annotations[1:]:
        _check_same_ids(annotations[0], other)

    raters = len(annotations)
    subjects = list(annotations[0])
    n = len(subjects)

    agreements = []
    yes_total = 0
    for tweet_id in subjects:
        yes = sum(label in annotation[tweet_id] for annotation in annotations)
        no = raters - yes
        yes_total += yes
        agreements.append(
            float(yes * yes + no * no - raters) / (raters * (raters - 1))
        )

    p_bar = math.fsum(agreements) / n
    p_yes = float(yes_total) / (n * raters)
    p_e = p_yes * p_yes + (1.0 - p_yes) * (1.0 - p_yes)

    if p_e == 1.0:
        if p_bar == 1.0:
            return 1.0
        raise LabelError("kappa undefined: chance agreement is 1")

    return (p_bar - p_e) / (1.0 - p_e)
