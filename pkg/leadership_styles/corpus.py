# corpus.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Loading, validating, filtering and partitioning tweet corpora.
#
# A corpus file is JSON Lines, one object per line:
#   {"id": "...", "timestamp": "2016-01-04T10:00:00Z", "author": "...",
#    "text": "...", "lang": "it"}
# Unknown keys are ignored.


import io
import json
import random
import re
from collections import defaultdict, namedtuple
from datetime import datetime, timezone

from leadership_styles.errors import CorpusError, DuplicateIdError, \
    PeriodError
from leadership_styles.file_operations import read_file_contents_as_lines, \
    write_file_contents
from leadership_styles.logging import logger
from leadership_styles.textprep import URL_PATTERN, Preprocessor

REQUIRED_KEYS = ("id", "timestamp", "author", "text", "lang")

# seconds with a fraction of any length
FRACTION_PATTERN = re.compile(r"(:\d{2})\.(\d+)")

REASON_SPAM = "spam"
REASON_NEGATIVE_SENTIMENT = "negative_sentiment"
REASON_LANGUAGE = "language"
REASON_CUSTOM = "custom"
REASONS = (REASON_SPAM, REASON_NEGATIVE_SENTIMENT, REASON_LANGUAGE, REASON_CUSTOM)

Tweet = namedtuple("Tweet", ["id", "timestamp", "author", "text", "lang"])

CorpusMeta = namedtuple("CorpusMeta", ["company", "period_label"])

FilterReport = namedtuple(
    "FilterReport", ["removed_count", "removed_fraction", "reason"]
)


class Corpus(object):
    """
    An ordered, immutable collection of tweets with unique ids.

    Args:
        tweets (iterable): Tweet objects, kept in the given order
        meta (CorpusMeta): company and period label
    """

    def __init__(self, tweets, meta):
        self.__tweets = tuple(tweets)
        self.__meta = meta

        seen = set()
        for tweet in self.__tweets:
            if tweet.id in seen:
                raise DuplicateIdError(tweet.id)
            seen.add(tweet.id)

    @property
    def tweets(self):
        return self.__tweets

    @property
    def meta(self):
        return self.__meta

    @property
    def ids(self):
        return [tweet.id for tweet in self.__tweets]

    def with_tweets(self, tweets, period_label=None):
        meta = self.__meta
        if period_label is not None:
            meta = meta._replace(period_label=period_label)
        return Corpus(tweets, meta)

    def __iter__(self):
        return iter(self.__tweets)

    def __len__(self):
        return len(self.__tweets)

    def __eq__(self, other):
        return isinstance(other, Corpus) and \
            self.__tweets == other.tweets and self.__meta == other.meta

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Corpus({!r}, {} tweets)".format(self.__meta, len(self))


def parse_timestamp(value):
    """
    Parse an RFC 3339 timestamp into an aware UTC datetime.

    Raises:
        ValueError: not a timestamp, or no UTC offset
    """

    if not isinstance(value, str):
        raise ValueError("timestamp must be a string")

    text = value.strip()
    if text[-1:] in ("Z", "z"):
        text = text[:-1] + "+00:00"
    # datetime.fromisoformat before 3.11 takes 3 or 6 fraction digits only
    text = FRACTION_PATTERN.sub(
        lambda match: "{}.{}".format(match.group(1), match.group(2).ljust(6, "0")[:6]),
        text, count=1
    )
    instant = datetime.fromisoformat(text.replace("t", "T", 1))
    if instant.tzinfo is None:
        raise ValueError("timestamp '{}' has no UTC offset".format(value))

    return instant.astimezone(timezone.utc)


def format_timestamp(instant):
    text = instant.astimezone(timezone.utc).isoformat()
    return text.replace("+00:00", "Z")


def _parse_tweet(line, line_number):
    try:
        obj = json.loads(line)
    except ValueError as e:
        raise CorpusError("malformed JSON ({})".format(e), line_number)

    if not isinstance(obj, dict):
        raise CorpusError("expected a JSON object", line_number)

    for key in REQUIRED_KEYS:
        if key not in obj:
            raise CorpusError("missing key '{}'".format(key), line_number)

    for key in ("id", "author", "text", "lang"):
        if not isinstance(obj[key], str):
            raise CorpusError("key '{}' must be a string".format(key), line_number)

    if not obj["id"]:
        raise CorpusError("empty tweet id", line_number)

    if not obj["text"].strip():
        raise CorpusError("empty text for tweet '{}'".format(obj["id"]), line_number)

    try:
        timestamp = parse_timestamp(obj["timestamp"])
    except ValueError as e:
        raise CorpusError("bad timestamp ({})".format(e), line_number)

    return Tweet(obj["id"], timestamp, obj["author"], obj["text"], obj["lang"])


def load_corpus(path, meta):
    """
    Load a JSON Lines corpus file.

    Blank lines are skipped; line numbers in errors count every physical
    line from 1.

    Args:
        path (str): the corpus file
        meta (CorpusMeta): metadata for the loaded corpus

    Returns:
        Corpus: the tweets in file order

    Raises:
        CorpusError: a malformed line, naming its line number
        DuplicateIdError: an id seen twice, naming the id
    """

    tweets = []
    seen = set()

    with io.open(path, encoding='utf-8') as infile:
        for line_number, line in enumerate(infile, 1):
            if not line.strip():
                continue

            tweet = _parse_tweet(line, line_number)
            if tweet.id in seen:
                raise DuplicateIdError(tweet.id, line_number)
            seen.add(tweet.id)
            tweets.append(tweet)

    logger.info("Loaded {} tweets from {}".format(len(tweets), path))
    return Corpus(tweets, meta)


def format_corpus(corpus):
    """ The JSON Lines document of a corpus, one tweet per line. """

    lines = []
    for tweet in corpus:
        lines.append(json.dumps({
            "id": tweet.id,
            "timestamp": format_timestamp(tweet.timestamp),
            "author": tweet.author,
            "text": tweet.text,
            "lang": tweet.lang,
        }, ensure_ascii=False))

    return "".join(line + "\n" for line in lines)


def save_corpus(corpus, path):
    write_file_contents(path, format_corpus(corpus))


def filter_corpus(corpus, predicate, reason=REASON_CUSTOM):
    """
    Remove the tweets the predicate marks.

    Args:
        corpus (Corpus)
        predicate (callable): Tweet -> bool, True means remove
        reason (str): one of REASONS

    Returns:
        tuple = (Corpus, FilterReport)
    """

    if reason not in REASONS:
        raise ValueError("unknown filter reason '{}'".format(reason))

    kept = [tweet for tweet in corpus if not predicate(tweet)]
    removed = len(corpus) - len(kept)
    fraction = float(removed) / len(corpus) if len(corpus) else 0.0

    return corpus.with_tweets(kept), FilterReport(removed, fraction, reason)


def language_predicate(lang):
    return lambda tweet: tweet.lang != lang


def _strip_urls(text):
    return " ".join(URL_PATTERN.sub(" ", text).split())


def duplicate_bot_predicate(corpus, min_authors=3):
    """
    Cheap bot heuristic: a tweet is removed when its text, once URLs are
    removed, is repeated by at least min_authors other distinct authors.

    Args:
        corpus (Corpus): the corpus the predicate will be applied to
        min_authors (int)

    Returns:
        callable: Tweet -> bool
    """

    authors_by_text = defaultdict(set)
    for tweet in corpus:
        authors_by_text[_strip_urls(tweet.text)].add(tweet.author)

    def predicate(tweet):
        others = authors_by_text.get(_strip_urls(tweet.text), set()) - {tweet.author}
        return len(others) >= min_authors

    return predicate


def negative_lexicon_predicate(words, lang, stopword_path=None):
    """
    Remove the tweets containing any word of a negative lexicon. Words and
    tweets are compared after preprocessing, so inflected forms match.

    Args:
        words (iterable): the lexicon
        lang (str): language code
        stopword_path (str): optional stopword override

    Returns:
        callable: Tweet -> bool
    """

    preprocessor = Preprocessor(lang, stopword_path)
    lexicon = set()
    for word in words:
        lexicon.update(preprocessor(word))

    return lambda tweet: bool(lexicon.intersection(preprocessor(tweet.text)))


def apply_filters(corpus, config):
    """
    Run the filters enabled in the configuration, in order.

    Args:
        corpus (Corpus)
        config (RunConfig)

    Returns:
        tuple = (Corpus, list of FilterReport)
    """

    reports = []
    for name in config.filters:
        if name == "duplicates":
            predicate = duplicate_bot_predicate(corpus, config.duplicate_min_authors)
            reason = REASON_SPAM
        elif name == "language":
            predicate = language_predicate(config.language)
            reason = REASON_LANGUAGE
        elif name == "negative_lexicon":
            words = read_file_contents_as_lines(config.negative_lexicon_path)
            predicate = negative_lexicon_predicate(
                words, config.language, config.stopword_path
            )
            reason = REASON_NEGATIVE_SENTIMENT
        else:
            raise ValueError("unknown filter '{}'".format(name))

        corpus, report = filter_corpus(corpus, predicate, reason)
        logger.info("Filter {} removed {} tweets ({:.2%})".format(
            name, report.removed_count, report.removed_fraction
        ))
        reports.append(report)

    return corpus, reports


def partition_by_period(corpus, boundaries):
    """
    Split a corpus into consecutive half-open periods.

    A tweet with timestamp t goes to bucket i iff
    boundaries[i] <= t < boundaries[i + 1]; tweets outside every range
    are dropped and counted. Buckets are labelled "P1", "P2", ...

    Args:
        corpus (Corpus)
        boundaries (list): strictly increasing aware datetimes, at least two

    Returns:
        tuple = (list of Corpus, int): the buckets and the dropped count

    Raises:
        PeriodError: fewer than two boundaries or not strictly increasing
    """

    if len(boundaries) < 2:
        raise PeriodError("at least two period boundaries are needed")

    for earlier, later in zip(boundaries, boundaries[1:]):
        if not earlier < later:
            raise PeriodError("period boundaries must be strictly increasing, "
                              "{} is not before {}".format(
                                  format_timestamp(earlier),
                                  format_timestamp(later)))

    buckets = [[] for _ in boundaries[1:]]
    dropped = 0
    for tweet in corpus:
        for i, (start, end) in enumerate(zip(boundaries, boundaries[1:])):
            if start <= tweet.timestamp < end:
                buckets[i].append(tweet)
                break
        else:
            dropped += 1

    if dropped:
        logger.warn("{} tweets fall outside every period and were dropped"
                    .format(dropped))

    partition = [
        corpus.with_tweets(bucket, "P{}".format(i))
        for i, bucket in enumerate(buckets, 1)
    ]
    return partition, dropped


def sample_training_set(buckets, per_period, seed):
    """
    Draw the same number of tweets at random from every period bucket.

    Args:
        buckets (list of Corpus): the periods
        per_period (int): tweets drawn from each period
        seed (int)

    Returns:
        Corpus: the sample, period by period, each period in corpus order

    Raises:
        PeriodError: a period holds fewer than per_period tweets
    """

    if not buckets:
        raise PeriodError("no periods to sample from")

    rng = random.Random(seed)
    sampled = []
    for bucket in buckets:
        if len(bucket) < per_period:
            raise PeriodError("period {} has {} tweets, {} requested".format(
                bucket.meta.period_label, len(bucket), per_period
            ))
        chosen = set(rng.sample(range(len(bucket)), per_period))
        sampled.extend(t for i, t in enumerate(bucket.tweets) if i in chosen)

    return buckets[0].with_tweets(sampled, "sample")
