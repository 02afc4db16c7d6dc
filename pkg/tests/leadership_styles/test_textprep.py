# test_textprep.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Tokenizing, stopwords and Snowball stemming

import os
import threading

import pytest

from leadership_styles.errors import LanguageError
from leadership_styles.file_operations import read_file_contents_as_lines
from leadership_styles.textprep import Preprocessor, load_stopwords, \
    preprocess, remove_stopwords, stem, tokenize

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def load_stem_pairs(filename):
    """ (word, stem) pairs from a tab separated reference file. """

    path = os.path.join(DATA_DIR, filename)
    return [tuple(line.split("\t")) for line in read_file_contents_as_lines(path)]


# reference vocabularies run through the Snowball stemmers
ENGLISH_STEMS = load_stem_pairs("snowball_en.tsv")
ITALIAN_STEMS = load_stem_pairs("snowball_it.tsv")

WORKED_SENTENCE = "At five thirty on Monday morning Luca was very relaxed"


def test_tokenize_empty():
    assert tokenize("") == []
    assert tokenize(None) == []


def test_tokenize_drops_urls_mentions_and_hash():
    assert tokenize("Ciao, Mondo! http://x.co @bob #energia") == \
        ["ciao", "mondo", "energia"]


def test_tokenize_case_folding():
    assert tokenize("ABC abc") == ["abc", "abc"]


def test_tokenize_strips_digits_and_punctuation():
    assert tokenize("3 volte, 2016!! www.enel.it ok") == ["volte", "ok"]
    assert tokenize("l'azienda dell'anno") == ["l", "azienda", "dell", "anno"]


def test_tokenize_splits_on_every_non_letter():
    assert tokenize("e-mail") == ["e", "mail"]
    assert tokenize("ben-essere snake_case") == ["ben", "essere", "snake", "case"]
    assert tokenize(u"un'azienda all'avanguardia") == \
        ["un", "azienda", "all", "avanguardia"]


def test_tokenize_keeps_accented_letters():
    # decomposed "è" is composed before matching
    assert tokenize(u"perchè Città") == [u"perchè", u"città"]


def test_remove_stopwords():
    assert remove_stopwords(["at", "five"], {"at"}) == ["five"]
    assert remove_stopwords(["at", "five"], set()) == ["at", "five"]
    assert remove_stopwords(["at", "on"], {"at", "on"}) == []


def test_stem_examples():
    assert stem("thirty", "en") == "thirti"
    assert stem("relaxed", "en") == "relax"
    assert stem("abbandonate", "it") == "abbandon"


def test_reference_vocabularies_are_large():
    assert len(ENGLISH_STEMS) >= 1000
    assert len(ITALIAN_STEMS) >= 1000
    assert all(len(pair) == 2 for pair in ENGLISH_STEMS + ITALIAN_STEMS)
    assert ("consolatory", "consolatori") in ENGLISH_STEMS
    assert (u"abbandonerà", "abbandon") in ITALIAN_STEMS


def test_stem_unsupported_language():
    with pytest.raises(LanguageError):
        stem("parola", "de")


@pytest.mark.parametrize("word,expected", ENGLISH_STEMS)
def test_english_reference_stems(word, expected):
    assert stem(word, "en") == expected


@pytest.mark.parametrize("word,expected", ITALIAN_STEMS)
def test_italian_reference_stems(word, expected):
    assert stem(word, "it") == expected


def test_stems_never_grow():
    # stemming is not idempotent ("occasion" => "occas" => "occa")
    assert stem(stem("occasion", "en"), "en") == "occa"
    for lang, pairs in (("en", ENGLISH_STEMS), ("it", ITALIAN_STEMS)):
        for word, _ in pairs:
            assert len(stem(word, lang)) <= len(word)


def test_english_stopwords_keep_numbers_and_days():
    stopwords = load_stopwords("en")
    assert {"at", "on", "was", "very"} <= stopwords
    assert not {"five", "monday", "morning", "luca"} & stopwords


def test_italian_stopwords_loaded():
    stopwords = load_stopwords("it")
    assert {"di", "che", "il", "della", "sono"} <= stopwords


def test_stopword_override_file(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text(u"# custom\nFive\n\nmonday\n", encoding="utf-8")
    assert load_stopwords("en", str(path)) == frozenset(["five", "monday"])


def test_preprocess_worked_sentence():
    assert preprocess(WORKED_SENTENCE, "en", load_stopwords("en")) == \
        ["five", "thirti", "monday", "morn", "luca", "relax"]


def test_preprocess_empty_and_stopwords_only():
    stopwords = load_stopwords("en")
    assert preprocess("", "en", stopwords) == []
    assert preprocess("at the on was very", "en", stopwords) == []


def test_preprocess_output_alphabet():
    tokens = Preprocessor("it")(
        u"L'AZIENDA ha 3 nuovi PROGETTI!! #Innovazione @ceo https://t.co/x"
    )
    assert tokens
    for token in tokens:
        assert token == token.lower()
        assert token.isalpha()


def test_preprocessor_matches_function():
    preprocessor = Preprocessor("en")
    assert preprocessor(WORKED_SENTENCE) == \
        preprocess(WORKED_SENTENCE, "en", load_stopwords("en"))


def test_preprocessor_unsupported_language():
    with pytest.raises(LanguageError):
        Preprocessor("fr")


def test_stem_from_threads():
    words = [word for word, _ in ENGLISH_STEMS]
    results = {}

    def work(name):
        results[name] = [stem(word, "en") for word in words]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    expected = [stemmed for _, stemmed in ENGLISH_STEMS]
    assert all(result == expected for result in results.values())
