# helpers.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Test helpers: a seeded pseudo-tweet generator and a brute-force
# dense QP oracle for small SVM problems.

import itertools
import json
import random
from functools import lru_cache

import numpy as np

from leadership_styles.classifier import train_multilabel
from leadership_styles.labels import AREA_LABELS, Label, LabelSet
from leadership_styles.textprep import Preprocessor, stem


# keyword families, one per leadership area
FAMILIES = {
    Label.SYM: ["vision", "inspiration", "mission", "dream", "future",
                "purpose", "values", "brand", "pride", "legacy", "passion",
                "identity"],
    Label.BEH: ["training", "mentor", "coaching", "employees", "welfare",
                "talent", "skills", "learning", "teamwork", "wellbeing",
                "feedback", "diversity"],
    Label.POL: ["negotiation", "lobby", "alliance", "power", "union",
                "government", "treaty", "coalition", "bargain", "influence",
                "minister", "senate"],
    Label.STR: ["merger", "restructuring", "division", "hierarchy", "governance",
                "reorganization", "subsidiary", "board", "acquisition",
                "headquarters", "spinoff", "holding"],
}

FILLER = ["company", "market", "today", "news", "price", "phone", "city",
          "weather", "football", "coffee", "music", "traffic", "holiday",
          "ticket", "shop", "pizza", "game", "movie", "street", "bank",
          "network", "store", "energy", "car", "bus", "airport", "summer",
          "winter", "garden", "office"]

# letters of the pseudo-word syllables
ONSETS = "bcdfgklmnprstvz"
VOWELS = "aeiou"


def pseudo_words(count, seed):
    """
    Seeded lexicon of distinct pronounceable non-words such as "tobelu".
    None of them stems like a keyword family word.

    Returns:
        list of str
    """

    rng = random.Random(seed)
    reserved = set(stem(word, "en") for family in FAMILIES.values() for word in family)
    words = []
    seen = set()
    while len(words) < count:
        word = "".join(rng.choice(ONSETS) + rng.choice(VOWELS)
                       for _ in range(rng.randint(3, 5)))
        if word in seen or stem(word, "en") in reserved:
            continue
        seen.add(word)
        words.append(word)
    return words


def generate_docs(n, seed, none_fraction=0.4, overlap_fraction=0.1, filler=FILLER):
    """
    Seeded pseudo-tweets over the four keyword families, padded with
    3 to 6 words drawn from filler.

    Returns:
        list: (text, LabelSet) pairs
    """

    rng = random.Random(seed)
    docs = []
    for _ in range(n):
        draw = rng.random()
        if draw < none_fraction:
            areas = []
        elif draw < none_fraction + overlap_fraction:
            areas = rng.sample(AREA_LABELS, 2)
        else:
            areas = [rng.choice(AREA_LABELS)]

        words = rng.sample(filler, rng.randint(3, 6))
        for area in areas:
            words.extend(rng.sample(FAMILIES[area], rng.randint(2, 3)))
        rng.shuffle(words)

        labels = LabelSet.from_areas(areas)
        docs.append((" ".join(words), labels))
    return docs


def corpus_lines(texts, lang="en", start="2016-01-04T10:00:00Z", authors=7):
    """ JSON Lines for a corpus file, ids t1, t2, ... """

    lines = []
    for i, text in enumerate(texts, 1):
        lines.append(json.dumps({
            "id": "t{}".format(i),
            "timestamp": start,
            "author": "user{}".format(i % authors),
            "text": text,
            "lang": lang,
        }))
    return "".join(line + "\n" for line in lines)


def labels_tsv(rows):
    lines = ["id\tlabels"]
    lines.extend("{}\t{}".format(tweet_id, labels) for tweet_id, labels in rows)
    return "\n".join(lines) + "\n"


class OracleSolution(object):
    def __init__(self, alpha, bias, objective, has_free):
        self.alpha = alpha
        self.bias = bias
        self.objective = objective
        self.has_free = has_free


def qp_oracle(K, y, c):
    """
    Exact maximiser of the SVM dual by enumerating the 3^n active sets
    (each multiplier at 0, at C or free) and solving the stationarity
    system of the free ones. Only meant for n <= 8.

    Returns:
        OracleSolution
    """

    K = np.asarray(K, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(y)
    Q = np.outer(y, y) * K

    best = None
    for states in itertools.product((0, 1, 2), repeat=n):
        free = [i for i in range(n) if states[i] == 2]
        alpha = np.array([c if s == 1 else 0.0 for s in states])
        bias = None

        if free:
            bound = [i for i in range(n) if states[i] != 2]
            m = len(free)
            system = np.zeros((m + 1, m + 1))
            system[:m, :m] = Q[np.ix_(free, free)]
            system[:m, m] = y[free]
            system[m, :m] = y[free]
            rhs = np.zeros(m + 1)
            rhs[:m] = 1.0 - Q[np.ix_(free, bound)] @ alpha[bound]
            rhs[m] = -np.dot(y[bound], alpha[bound])
            try:
                solution = np.linalg.solve(system, rhs)
            except np.linalg.LinAlgError:
                continue
            alpha[free] = solution[:m]
            bias = solution[m]
            if np.any(alpha[free] < -1e-12) or np.any(alpha[free] > c + 1e-12):
                continue
        elif abs(np.dot(y, alpha)) > 1e-12:
            continue

        objective = np.sum(alpha) - 0.5 * alpha @ Q @ alpha
        if best is None or objective > best.objective + 1e-12:
            best = OracleSolution(alpha, bias, objective, bool(free))

    return best


def random_dataset(seed, n_min=4, n_max=8, dim=3):
    """ Dense points and +-1 labels with both classes present. """

    rng = np.random.RandomState(seed)
    n = rng.randint(n_min, n_max + 1)
    points = rng.normal(size=(n, dim))
    y = np.where(rng.rand(n) < 0.5, 1.0, -1.0)
    y[0], y[1] = 1.0, -1.0
    return points, y


SMALL_GRID = [(1.0, 1.0), (10.0, 1.0)]


@lru_cache(maxsize=None)
def synthetic_training(n=200, seed=3, train_none_model=False):
    """
    Preprocessed synthetic documents and a model trained on them; cached
    so the test modules share one training run.

    Returns:
        tuple = (list of token lists, list of LabelSet, MultiLabelModel)
    """

    preprocess = Preprocessor("en")
    generated = generate_docs(n, seed)
    docs = [preprocess(text) for text, _ in generated]
    gold = [labels for _, labels in generated]

    model = train_multilabel(list(zip(docs, gold)), grid=SMALL_GRID, folds=5,
                             seed=0, train_none_model=train_none_model,
                             language="en")
    return docs, gold, model
