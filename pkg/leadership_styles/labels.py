# labels.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# The leadership area labels and the TSV label file format:
#
#   id<TAB>labels
#   t1<TAB>SYM,POL
#   t2<TAB>NONE


import csv
import io
from enum import Enum

from leadership_styles.errors import LabelError
from leadership_styles.file_operations import write_file_contents


class Label(Enum):
    SYM = "SYM"
    BEH = "BEH"
    POL = "POL"
    STR = "STR"
    NONE = "NONE"

    @property
    def order(self):
        return LABEL_ORDER.index(self)

    def __str__(self):
        return self.value


LABEL_ORDER = (Label.SYM, Label.BEH, Label.POL, Label.STR, Label.NONE)
AREA_LABELS = LABEL_ORDER[:4]
ALL_LABELS = LABEL_ORDER


class LabelSet(object):
    """
    The labels of one tweet: a non-empty subset of the four areas, or the
    exclusive NONE label.

    Raises:
        LabelError: empty set, or NONE mixed with an area
    """

    __slots__ = ('_labels',)

    def __init__(self, labels):
        labels = frozenset(Label(label) for label in labels)
        if not labels:
            raise LabelError("a label set cannot be empty")
        if Label.NONE in labels and len(labels) > 1:
            raise LabelError("NONE cannot be combined with an area label")
        self._labels = labels

    @classmethod
    def none(cls):
        return cls([Label.NONE])

    @classmethod
    def from_areas(cls, areas):
        """ The given area labels, or NONE when there are none. """

        areas = list(areas)
        return cls(areas) if areas else cls.none()

    @classmethod
    def parse(cls, text):
        """
        e.g.
        LabelSet.parse("SYM,POL") => LabelSet({SYM, POL})
        """

        names = [name.strip() for name in text.split(",") if name.strip()]
        labels = []
        for name in names:
            try:
                labels.append(Label[name])
            except KeyError:
                raise LabelError("unknown label '{}'".format(name))
        if len(set(labels)) != len(labels):
            raise LabelError("repeated label in '{}'".format(text))
        return cls(labels)

    @property
    def labels(self):
        return self._labels

    @property
    def is_none(self):
        return Label.NONE in self._labels

    def format(self):
        return ",".join(label.value for label in self.ordered())

    def ordered(self):
        return sorted(self._labels, key=lambda label: label.order)

    def __contains__(self, label):
        return label in self._labels

    def __iter__(self):
        return iter(self.ordered())

    def __len__(self):
        return len(self._labels)

    def __eq__(self, other):
        return isinstance(other, LabelSet) and self._labels == other._labels

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._labels)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "LabelSet({})".format(self.format())


def read_labels(path):
    """
    Read a labels TSV file.

    Args:
        path (str)

    Returns:
        dict: tweet id -> LabelSet, in file order

    Raises:
        LabelError: bad header, malformed row, unknown label or repeated id
    """

    rows = {}
    with io.open(path, encoding='utf-8', newline='') as infile:
        reader = csv.reader(infile, delimiter='\t')
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["id", "labels"]:
            raise LabelError("{}: expected header 'id<TAB>labels'".format(path))

        for line_number, row in enumerate(reader, 2):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise LabelError("{}: line {}: expected 2 columns, got {}".format(
                    path, line_number, len(row)))

            tweet_id = row[0].strip()
            if tweet_id in rows:
                raise LabelError("{}: line {}: repeated id '{}'".format(
                    path, line_number, tweet_id))
            try:
                rows[tweet_id] = LabelSet.parse(row[1])
            except LabelError as e:
                raise LabelError("{}: line {}: {}".format(path, line_number, e))

    return rows


def format_labels(rows):
    """
    Args:
        rows (iterable): (tweet id, LabelSet) pairs

    Returns:
        str: the TSV document
    """

    lines = ["id\tlabels"]
    lines.extend("{}\t{}".format(tweet_id, labels.format())
                 for tweet_id, labels in rows)
    return "\n".join(lines) + "\n"


def write_labels(path, rows):
    write_file_contents(path, format_labels(rows))
