# errors.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Exceptions raised across the package. The CLI catches LeadershipError
# and turns it into a single "error:" line.


class LeadershipError(Exception):
    pass


class ConfigError(LeadershipError):
    pass


class CorpusError(LeadershipError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line {}: {}".format(line_number, message)
        super(CorpusError, self).__init__(message)
        self.line_number = line_number


class DuplicateIdError(CorpusError):
    def __init__(self, tweet_id, line_number=None):
        super(DuplicateIdError, self).__init__(
            "duplicate tweet id '{}'".format(tweet_id), line_number
        )
        self.tweet_id = tweet_id


class PeriodError(LeadershipError):
    pass


class LanguageError(LeadershipError):
    pass


class VocabularyError(LeadershipError):
    pass


class DimensionError(LeadershipError):
    def __init__(self, left, right):
        super(DimensionError, self).__init__(
            "dimension mismatch: {} != {}".format(left, right)
        )


class TrainingError(LeadershipError):
    pass


class SingleClassError(TrainingError):
    pass


class ConvergenceError(TrainingError):
    def __init__(self, message, iterations, gap, objective):
        super(ConvergenceError, self).__init__(
            "{} (iterations={}, kkt_gap={:.6g}, objective={:.6g})".format(
                message, iterations, gap, objective
            )
        )
        self.iterations = iterations
        self.gap = gap
        self.objective = objective


class InsufficientDataError(TrainingError):
    def __init__(self, label, positives, required):
        super(InsufficientDataError, self).__init__(
            "label {} has {} positive examples, at least {} required".format(
                label, positives, required
            )
        )
        self.label = label


class FoldError(TrainingError):
    def __init__(self, message, label=None):
        if label is not None:
            message = "label {}: {}".format(label, message)
        super(FoldError, self).__init__(message)
        self.label = label


class LabelError(LeadershipError):
    pass


class LengthMismatchError(LeadershipError):
    pass


class IdMismatchError(LeadershipError):
    def __init__(self, message, ids):
        ids = sorted(ids)
        super(IdMismatchError, self).__init__(
            "{}: {}".format(message, ", ".join(ids[:5]))
        )
        self.ids = ids


class ModelFormatError(LeadershipError):
    pass


class ModelVersionError(ModelFormatError):
    def __init__(self, found, supported):
        super(ModelVersionError, self).__init__(
            "model file version {} is not supported (this build reads "
            "version {})".format(found, supported)
        )
        self.found = found
        self.supported = supported


class DistributionError(LeadershipError):
    pass


class ScoreRangeError(LeadershipError):
    pass
