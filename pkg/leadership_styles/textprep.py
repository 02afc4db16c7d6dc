# textprep.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Turns raw text into stemmed, stopword free token lists.


import re
import threading
import unicodedata
from functools import lru_cache

import snowballstemmer

from leadership_styles.common import SUPPORTED_LANGUAGES, get_stopwords_file
from leadership_styles.errors import LanguageError
from leadership_styles.file_operations import read_file_contents_as_lines

URL_PATTERN = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
MENTION_PATTERN = re.compile(r"@\w+")
# a run of letters: word characters minus digits and underscore
WORD_PATTERN = re.compile(r"[^\W\d_]+")

_local = threading.local()


def tokenize(text):
    """
    Split a text into lowercase word tokens.

    URLs and @-mentions are dropped, the body of a hashtag is kept,
    everything that is not a letter separates tokens.

    e.g.
    tokenize("Ciao, Mondo! http://x.co @bob #energia") => ['ciao', 'mondo', 'energia']

    Args:
        text (str)

    Returns:
        list: the tokens, in text order
    """

    if not text:
        return []

    text = unicodedata.normalize("NFC", text)
    text = URL_PATTERN.sub(" ", text)
    text = MENTION_PATTERN.sub(" ", text)
    return WORD_PATTERN.findall(text.lower())


def remove_stopwords(tokens, stopwords):
    return [token for token in tokens if token not in stopwords]


def _check_language(lang):
    if lang not in SUPPORTED_LANGUAGES:
        raise LanguageError("unsupported language '{}', expected one of {}".format(
            lang, ", ".join(sorted(SUPPORTED_LANGUAGES))
        ))


def _get_stemmer(lang):
    # stemmer objects keep state between calls: one per thread
    stemmers = getattr(_local, 'stemmers', None)
    if stemmers is None:
        stemmers = _local.stemmers = {}

    if lang not in stemmers:
        stemmers[lang] = snowballstemmer.stemmer(SUPPORTED_LANGUAGES[lang])
    return stemmers[lang]


@lru_cache(maxsize=65536)
def _stem(token, lang):
    return _get_stemmer(lang).stemWord(token)


def stem(token, lang):
    """
    Snowball stem of a lowercase token.

    Args:
        token (str): a lowercase word
        lang (str): "it" or "en"

    Returns:
        str

    Raises:
        LanguageError: lang is not supported
    """

    _check_language(lang)
    return _stem(token, lang)


def load_stopwords(lang, path=None):
    """
    Load a stopword set: the shipped Snowball list for lang, or the
    override file at path (UTF-8, one word per line).

    Returns:
        frozenset: NFC normalised, lowercase words
    """

    _check_language(lang)
    if path is None:
        path = get_stopwords_file(lang)

    return frozenset(
        unicodedata.normalize("NFC", word).lower()
        for word in read_file_contents_as_lines(path)
    )


def preprocess(text, lang, stopwords):
    """
    tokenize, remove stopwords and stem each token, in this order.

    e.g. with the English stopwords
    preprocess("At five thirty on Monday morning Luca was very relaxed", "en", ...)
        => ['five', 'thirti', 'monday', 'morn', 'luca', 'relax']
    """

    _check_language(lang)
    tokens = remove_stopwords(tokenize(text), stopwords)
    return [_stem(token, lang) for token in tokens]


class Preprocessor(object):
    """ preprocess bound to one language and stopword set. """

    def __init__(self, lang, stopword_path=None):
        _check_language(lang)
        self.lang = lang
        self.stopwords = load_stopwords(lang, stopword_path)

    def __call__(self, text):
        return preprocess(text, self.lang, self.stopwords)
