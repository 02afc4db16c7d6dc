# cli.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# The leadership-styles command line: data goes to stdout (or --out),
# diagnostics to stderr, success or failure to the exit status.

"""
Perceived leadership styles from tweets.

Usage:
  leadership-styles train <corpus> <labels> <model> [options]
  leadership-styles classify <corpus> <model> [options]
  leadership-styles evaluate <predictions> <gold> [options]
  leadership-styles report <classified> <corpora>... [options]
  leadership-styles profile <classified> <corpora>... [options]
  leadership-styles kappa <annotator> <annotators>... [options]
  leadership-styles sample <corpus> <per_period> [options]
  leadership-styles index <scores> [options]
  leadership-styles -h | --help
  leadership-styles --version

Options:
  -c, --config=<path>     Flat JSON run configuration.
  --seed=<n>              Seed overriding the configuration.
  --lang=<code>           Language overriding the configuration (it, en).
  -o, --out=<path>        Write the result to a file instead of stdout.
  -f, --format=<fmt>      Report format, csv or json [default: csv].
  --group-by=<key>        Report groups: company, period or both [default: both].
  --company=<name>        Company name for the corpora, the file stem
                          when omitted.
  --totals                Add a Total row per company to the report.
  -v, --verbose           Print progress information.
  -d, --debug             Print debug information.
  -h, --help              Show this screen.
"""

import json
import os
import sys

from docopt import DocoptExit, docopt

from leadership_styles import __version__
from leadership_styles.classifier import classify_many, train_multilabel
from leadership_styles.config import load_config
from leadership_styles.corpus import CorpusMeta, apply_filters, \
    format_corpus, load_corpus, parse_timestamp, partition_by_period, \
    sample_training_set
from leadership_styles.errors import ConfigError, IdMismatchError, \
    LeadershipError
from leadership_styles.evaluation import evaluate, fleiss_kappa, \
    pairwise_kappa
from leadership_styles.file_operations import write_file_contents
from leadership_styles.labels import ALL_LABELS, AREA_LABELS, format_labels, \
    read_labels
from leadership_styles.leadership import OVERALL_COMPANY, REPORT_FORMATS, \
    TOTAL_PERIOD, aggregate, balance_profile, combine_distributions, \
    leadership_index, load_scores, overall_distribution, render_report
from leadership_styles.logging import logger
from leadership_styles.model_io import load_model, save_model
from leadership_styles.textprep import Preprocessor

GROUP_BY = ("company", "period", "both")
WHOLE_CORPUS_PERIOD = "all"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit(text, out=None):
    if out:
        write_file_contents(out, text)
        logger.info("Wrote {}".format(out))
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _emit_json(data, out=None):
    _emit(json.dumps(data, indent=2) + "\n", out)


def _stem_name(path):
    return os.path.splitext(os.path.basename(path))[0]


def _metric_labels(config):
    return ALL_LABELS if config.include_none_in_metrics else AREA_LABELS


def _boundaries(config):
    try:
        return [parse_timestamp(value) for value in config.period_boundaries]
    except (ValueError, TypeError) as e:
        raise ConfigError("bad period boundary: {}".format(e))


def _check_ids(expected, found, message):
    unknown = set(found) - set(expected)
    if unknown:
        raise IdMismatchError(message, unknown)


def _gold_order(predictions, gold):
    if set(predictions) != set(gold):
        raise IdMismatchError("prediction and gold ids differ",
                              set(predictions).symmetric_difference(gold))
    ids = list(gold)
    return [predictions[i] for i in ids], [gold[i] for i in ids]


def cmd_train(corpus_path, labels_path, model_out, config):
    """
    Train the area classifiers on a labelled corpus and save the model.

    Prints the chosen (C, gamma) per label, the cross-validation table and
    the fit on the training documents as JSON.
    """

    corpus = load_corpus(corpus_path, CorpusMeta(_stem_name(corpus_path), "train"))
    gold = read_labels(labels_path)
    _check_ids(corpus.ids, gold, "labels refer to tweets missing from the corpus")

    corpus, _ = apply_filters(corpus, config)
    tweets = [tweet for tweet in corpus if tweet.id in gold]
    unlabelled = len(corpus) - len(tweets)
    if unlabelled:
        logger.info("{} unlabelled tweets left out of training".format(unlabelled))

    preprocess = Preprocessor(config.language, config.stopword_path)
    docs = [preprocess(tweet.text) for tweet in tweets]
    expected = [gold[tweet.id] for tweet in tweets]

    model = train_multilabel(
        list(zip(docs, expected)), grid=config.grid, folds=config.folds,
        seed=config.seed, min_df=config.min_df,
        train_none_model=config.train_none_model, n_jobs=config.n_jobs,
        solver_options={"tol": config.tol, "eps": config.eps,
                        "max_passes": config.max_passes},
        language=config.language,
    )
    save_model(model, model_out)

    fit = evaluate(classify_many(model, docs), expected, _metric_labels(config))
    _emit_json({
        "chosen_params": dict(
            (label.value, list(point))
            for label, point in sorted(model.chosen_params.items(),
                                       key=lambda item: item[0].order)
        ),
        "cv_table": dict(
            (label.value, [[c, gamma, score] for (c, gamma), score in table])
            for label, table in sorted(model.cv_tables.items(),
                                       key=lambda item: item[0].order)
        ),
        "training_fit": fit.as_dict(),
    })
    return EXIT_OK


def cmd_classify(corpus_path, model_path, out, config):
    model = load_model(model_path)
    corpus = load_corpus(corpus_path, CorpusMeta(_stem_name(corpus_path), None))
    corpus, _ = apply_filters(corpus, config)

    language = model.language or config.language
    foreign = sum(1 for tweet in corpus if tweet.lang != language)
    if foreign:
        logger.warn("{} of {} tweets are not in the model language '{}'".format(
            foreign, len(corpus), language))

    preprocess = Preprocessor(language, config.stopword_path)
    predictions = classify_many(model, [preprocess(t.text) for t in corpus])
    _emit(format_labels(zip(corpus.ids, predictions)), out)
    return EXIT_OK


def cmd_evaluate(predictions_path, gold_path, out, config):
    predicted, expected = _gold_order(read_labels(predictions_path),
                                      read_labels(gold_path))
    report = evaluate(predicted, expected, _metric_labels(config))
    _emit_json(report.as_dict(), out)
    return EXIT_OK


def _company_distributions(classified, corpus, config):
    """ One distribution per period of a company corpus. """

    boundaries = _boundaries(config)
    if boundaries:
        buckets, _ = partition_by_period(corpus, boundaries)
    else:
        buckets = [corpus.with_tweets(corpus.tweets, WHOLE_CORPUS_PERIOD)]

    distributions = []
    for bucket in buckets:
        if not len(bucket):
            logger.warn("No tweets for {} in period {}, skipped".format(
                bucket.meta.company, bucket.meta.period_label))
            continue
        distributions.append(aggregate(
            [(tweet, classified[tweet.id]) for tweet in bucket], bucket.meta))
    return distributions


def group_distributions(classified_path, corpus_paths, group_by, company, config):
    """
    Distributions of a classified labels file over one or more corpora.

    Args:
        classified_path (str): labels TSV written by classify
        corpus_paths (list of str): one corpus per company
        group_by (str): company, period or both
        company (str): company name, or None for the corpus file stem
        config (RunConfig): period_boundaries split the corpora

    Returns:
        list of AreaDistribution
    """

    if group_by not in GROUP_BY:
        raise UsageError("--group-by must be one of {}".format(", ".join(GROUP_BY)))

    classified = read_labels(classified_path)
    per_period = []
    for path in corpus_paths:
        name = company or _stem_name(path)
        corpus = load_corpus(path, CorpusMeta(name, None))
        corpus, _ = apply_filters(corpus, config)
        _check_ids(classified, corpus.ids,
                   "tweets of {} missing from the classified file".format(path))
        per_period.extend(_company_distributions(classified, corpus, config))

    if group_by == "company":
        return combine_distributions(per_period, TOTAL_PERIOD)

    if group_by == "period":
        by_period = {}
        for d in per_period:
            by_period.setdefault(d.period_label, []).append(d)
        return [
            overall_distribution(ds, OVERALL_COMPANY, period_label)
            for period_label, ds in by_period.items()
        ]

    return per_period


def cmd_report(classified_path, corpus_paths, group_by, fmt, company, totals,
               out, config):
    if fmt not in REPORT_FORMATS:
        raise UsageError("--format must be one of {}".format(", ".join(REPORT_FORMATS)))

    distributions = group_distributions(classified_path, corpus_paths, group_by,
                                        company, config)
    if totals and group_by == "both":
        distributions.extend(combine_distributions(distributions, TOTAL_PERIOD))

    _emit(render_report(distributions, fmt), out)
    return EXIT_OK


def cmd_profile(classified_path, corpus_paths, group_by, company, out, config):
    distributions = group_distributions(classified_path, corpus_paths, group_by,
                                        company, config)
    profiles = []
    for d in distributions:
        try:
            profile = balance_profile(d)
        except LeadershipError as e:
            logger.warn("{}, skipped".format(e))
            continue

        entry = {"company": d.company, "period": d.period_label}
        entry.update(profile._asdict())
        profiles.append(entry)

    _emit_json(profiles, out)
    return EXIT_OK


def _annotator_names(paths):
    names = [_stem_name(path) for path in paths]
    if len(set(names)) != len(names):
        return list(paths)
    return names


def cmd_kappa(annotator_paths, out, config):
    annotations = [read_labels(path) for path in annotator_paths]
    named = list(zip(_annotator_names(annotator_paths), annotations))
    labels = _metric_labels(config)

    result = {"pairwise": pairwise_kappa(named, labels)}
    if len(annotations) > 2:
        result["fleiss"] = dict(
            (label.value, fleiss_kappa(annotations, label)) for label in labels
        )

    _emit_json(result, out)
    return EXIT_OK


def cmd_sample(corpus_path, per_period, out, config):
    try:
        per_period = int(per_period)
    except ValueError:
        raise UsageError("<per_period> must be an integer")
    if per_period < 1:
        raise UsageError("<per_period> must be positive")

    boundaries = _boundaries(config)
    if not boundaries:
        raise ConfigError("sampling needs period_boundaries in the configuration")

    corpus = load_corpus(corpus_path, CorpusMeta(_stem_name(corpus_path), None))
    corpus, _ = apply_filters(corpus, config)
    buckets, _ = partition_by_period(corpus, boundaries)
    _emit(format_corpus(sample_training_set(buckets, per_period, config.seed)), out)
    return EXIT_OK


def cmd_index(scores_path, out, config):
    scores = load_scores(scores_path, config.score_min, config.score_max)
    _emit_json({"leadership_index": leadership_index(scores)}, out)
    return EXIT_OK


def _parse_seed(value):
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise UsageError("--seed must be an integer")


def run(args):
    if args["--debug"]:
        logger.force_output_level("debug")
    elif args["--verbose"]:
        logger.force_output_level("info")

    config = load_config(args["--config"], seed=_parse_seed(args["--seed"]),
                         language=args["--lang"])
    out = args["--out"]
    company = args["--company"]

    if args["train"]:
        return cmd_train(args["<corpus>"], args["<labels>"], args["<model>"], config)
    if args["classify"]:
        return cmd_classify(args["<corpus>"], args["<model>"], out, config)
    if args["evaluate"]:
        return cmd_evaluate(args["<predictions>"], args["<gold>"], out, config)
    if args["report"]:
        return cmd_report(args["<classified>"], args["<corpora>"],
                          args["--group-by"], args["--format"], company,
                          args["--totals"], out, config)
    if args["profile"]:
        return cmd_profile(args["<classified>"], args["<corpora>"],
                           args["--group-by"], company, out, config)
    if args["kappa"]:
        return cmd_kappa([args["<annotator>"]] + args["<annotators>"], out, config)
    if args["sample"]:
        return cmd_sample(args["<corpus>"], args["<per_period>"], out, config)
    if args["index"]:
        return cmd_index(args["<scores>"], out, config)

    raise UsageError("no command given")


def main(argv=None):
    """
    Entry point of bin/leadership-styles.

    Returns:
        int: 0 on success, 1 on a failure, 2 on a usage error
    """

    logger.set_app_name("leadership-styles")

    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit:
        logger.error("invalid arguments, see leadership-styles --help")
        return EXIT_USAGE

    try:
        return run(args)
    except UsageError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (LeadershipError, IOError, OSError, ValueError) as e:
        logger.error(str(e))
        return EXIT_ERROR
    finally:
        logger.flush()
