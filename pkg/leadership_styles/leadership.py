# leadership.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Distributions of classified tweets over the leadership areas, balance
# profiles and the questionnaire Leadership Index.


import csv
import io
import json
import math
import re
from collections import OrderedDict, namedtuple
from decimal import ROUND_HALF_UP, Decimal

from leadership_styles.errors import DistributionError, ScoreRangeError
from leadership_styles.file_operations import read_file_contents
from leadership_styles.labels import AREA_LABELS, LABEL_ORDER, Label

REPORT_HEADER = ("company", "period", "label", "count", "percentage")
REPORT_FORMATS = ("csv", "json")

TOTAL_PERIOD = "Total"
OVERALL_COMPANY = "Overall"

N_FACTORS = 10
DEFAULT_SCORE_MIN = 0.0
DEFAULT_SCORE_MAX = 4.0

TWO_PLACES = Decimal("0.01")


class AreaDistribution(object):
    """
    Tweet counts per label for one (company, period) group.

    Percentages are taken against the number of tweets, so the four areas
    plus NONE can exceed 100 when tweets carry several areas.

    Args:
        company (str)
        period_label (str)
        counts (dict): Label -> count, missing labels count 0
        total (int): number of tweets in the group, > 0
    """

    def __init__(self, company, period_label, counts, total):
        self.company = company
        self.period_label = period_label
        self.counts = OrderedDict(
            (label, int(counts.get(label, 0))) for label in LABEL_ORDER
        )
        self.total = int(total)

        if self.total <= 0:
            raise DistributionError(
                "no tweets in group {} / {}".format(company, period_label))
        for label, count in self.counts.items():
            if not 0 <= count <= self.total:
                raise DistributionError(
                    "count {} of {} outside [0, {}]".format(count, label, self.total))

    @property
    def group(self):
        return (self.company, self.period_label)

    @property
    def percentages(self):
        return OrderedDict(
            (label, 100.0 * count / self.total)
            for label, count in self.counts.items()
        )

    def rounded_percentage(self, label):
        """ The two-decimal percentage, rounded half-up on the exact ratio. """

        ratio = Decimal(self.counts[label]) * 100 / Decimal(self.total)
        return ratio.quantize(TWO_PLACES, rounding=ROUND_HALF_UP)

    def __eq__(self, other):
        return isinstance(other, AreaDistribution) and \
            self.group == other.group and self.counts == other.counts and \
            self.total == other.total

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "AreaDistribution({!r}, {!r}, {}, total={})".format(
            self.company, self.period_label,
            dict((str(k), v) for k, v in self.counts.items()), self.total)


def aggregate(classified, group):
    """
    Count the labels of classified tweets.

    Args:
        classified (iterable): (Tweet, LabelSet) pairs
        group: a CorpusMeta or a (company, period_label) pair

    Returns:
        AreaDistribution

    Raises:
        DistributionError: no tweets
    """

    company, period_label = group
    counts = dict((label, 0) for label in LABEL_ORDER)
    total = 0
    for _, labels in classified:
        total += 1
        for label in labels:
            counts[label] += 1

    if total == 0:
        raise DistributionError(
            "no tweets in group {} / {}".format(company, period_label))

    return AreaDistribution(company, period_label, counts, total)


def _sum_distributions(ds, company, period_label):
    counts = dict((label, sum(d.counts[label] for d in ds)) for label in LABEL_ORDER)
    return AreaDistribution(company, period_label, counts, sum(d.total for d in ds))


def combine_distributions(ds, period_label=TOTAL_PERIOD):
    """
    Per-company totals over all periods.

    Returns:
        list of AreaDistribution: one per company, in first-seen order
    """

    by_company = OrderedDict()
    for d in ds:
        by_company.setdefault(d.company, []).append(d)

    return [
        _sum_distributions(group, company, period_label)
        for company, group in by_company.items()
    ]


def overall_distribution(ds, company=OVERALL_COMPANY, period_label=TOTAL_PERIOD):
    if not ds:
        raise DistributionError("no distributions to combine")
    return _sum_distributions(ds, company, period_label)


BalanceProfile = namedtuple(
    "BalanceProfile", ["symbolic", "behavioral", "political", "structural"]
)


def balance_profile(d):
    """
    Relative weight of the four areas, NONE left out.

    Raises:
        DistributionError: every area count is zero
    """

    area_counts = [d.counts[label] for label in AREA_LABELS]
    area_total = sum(area_counts)
    if area_total == 0:
        raise DistributionError(
            "no area labels in group {} / {}: profile undefined".format(*d.group))

    return BalanceProfile(*[float(count) / area_total for count in area_counts])


class LeadershipScores(object):
    """
    The ten factor scores of the leadership questionnaire.

    Args:
        values (sequence): ten numbers
        score_min (float): lowest score on the answer scale
        score_max (float): highest score on the answer scale

    Raises:
        ScoreRangeError: not ten values, or a value outside the scale
    """

    def __init__(self, values, score_min=DEFAULT_SCORE_MIN,
                 score_max=DEFAULT_SCORE_MAX):
        if not score_max > score_min:
            raise ScoreRangeError("score_max must exceed score_min")

        values = list(values)
        if len(values) != N_FACTORS:
            raise ScoreRangeError("{} factor scores expected, got {}".format(
                N_FACTORS, len(values)))

        for number, value in enumerate(values, 1):
            if isinstance(value, bool) or not isinstance(value, (int, float)) \
                    or math.isnan(value):
                raise ScoreRangeError("factor {} score is not a number: {!r}"
                                      .format(number, value))
            if not score_min <= value <= score_max:
                raise ScoreRangeError(
                    "factor {} score {} outside [{}, {}]".format(
                        number, value, score_min, score_max))

        self.values = tuple(float(value) for value in values)
        self.score_min = float(score_min)
        self.score_max = float(score_max)


def leadership_index(scores, score_min=None, score_max=None):
    """
    LI = 10 * sum((v_i - min) / (max - min)); with the default 0-4 scale
    this is 10 * sum(v_i) / 4, spanning [0, 100].

    Args:
        scores (LeadershipScores or sequence of ten numbers)
        score_min, score_max (float): scale of a plain sequence, 0 and 4
            by default; ignored for LeadershipScores

    Returns:
        float

    Raises:
        ScoreRangeError
    """

    if not isinstance(scores, LeadershipScores):
        scores = LeadershipScores(
            scores,
            DEFAULT_SCORE_MIN if score_min is None else score_min,
            DEFAULT_SCORE_MAX if score_max is None else score_max,
        )

    span = scores.score_max - scores.score_min
    return 10.0 * math.fsum(v - scores.score_min for v in scores.values) / span


def load_scores(path, score_min=DEFAULT_SCORE_MIN, score_max=DEFAULT_SCORE_MAX):
    """ Read a JSON array of ten factor scores. """

    try:
        values = json.loads(read_file_contents(path))
    except ValueError as exc:
        raise ScoreRangeError("invalid scores file {}: {}".format(path, exc))

    if not isinstance(values, list):
        raise ScoreRangeError("scores file {} must hold a JSON array".format(path))
    return LeadershipScores(values, score_min, score_max)


def _period_key(period_label):
    # P2 before P10, the Total row last
    if period_label == TOTAL_PERIOD:
        return (1, ())
    parts = re.split(r'(\d+)', period_label)
    return (0, tuple((0, int(p), "") if p.isdigit() else (1, 0, p)
                     for p in parts if p))


def _sorted(ds):
    return sorted(ds, key=lambda d: (d.company, _period_key(d.period_label)))


def render_csv(ds):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for d in _sorted(ds):
        for label in LABEL_ORDER:
            writer.writerow([
                d.company, d.period_label, label.value, d.counts[label],
                str(d.rounded_percentage(label)),
            ])
    return out.getvalue()


def render_json(ds):
    document = {
        "header": list(REPORT_HEADER),
        "distributions": [
            OrderedDict([
                ("company", d.company),
                ("period", d.period_label),
                ("total", d.total),
                ("counts", OrderedDict((l.value, c) for l, c in d.counts.items())),
                ("percentages", OrderedDict(
                    (l.value, float(d.rounded_percentage(l))) for l in LABEL_ORDER
                )),
            ])
            for d in _sorted(ds)
        ],
    }
    return json.dumps(document, indent=2) + "\n"


def render_report(ds, fmt="csv"):
    """
    Render distributions as a CSV or JSON document.

    CSV rows are `company,period,label,count,percentage`, ordered by
    company, then period, then SYM, BEH, POL, STR, NONE. The JSON form
    carries the totals so parse_report_json can rebuild the distributions.

    Raises:
        ValueError: unknown format
    """

    if fmt == "csv":
        return render_csv(ds)
    if fmt == "json":
        return render_json(ds)
    raise ValueError("unknown report format '{}'".format(fmt))


def parse_report_json(document):
    """
    Rebuild the distributions of a JSON report.

    Raises:
        DistributionError: malformed document
    """

    try:
        data = json.loads(document)
        return [
            AreaDistribution(
                entry["company"], entry["period"],
                dict((Label(name), count) for name, count in entry["counts"].items()),
                entry["total"],
            )
            for entry in data["distributions"]
        ]
    except DistributionError:
        raise
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise DistributionError("malformed report: {}".format(exc))
