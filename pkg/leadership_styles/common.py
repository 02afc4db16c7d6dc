# common.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# This contains all the common names across the package.


import os

current_dir = os.path.abspath(os.path.dirname(__file__))

data_dir = os.path.join(current_dir, 'data')
stopwords_dir = os.path.join(data_dir, 'stopwords')

# Language codes accepted by the preprocessing pipeline, mapped to the
# Snowball algorithm names.
SUPPORTED_LANGUAGES = {
    "it": "italian",
    "en": "english",
}

# The default calibration grid: C x gamma
DEFAULT_C_VALUES = (0.1, 1.0, 10.0, 100.0)
DEFAULT_GAMMA_VALUES = (0.01, 0.1, 1.0, 10.0)
DEFAULT_GRID = tuple(
    (c, gamma) for c in DEFAULT_C_VALUES for gamma in DEFAULT_GAMMA_VALUES
)

DEFAULT_FOLDS = 5

MODEL_FORMAT_VERSION = 1
IDF_FORMULA = "smoothed_ln_plus1"


def get_stopwords_file(lang):
    return os.path.join(stopwords_dir, "{}.txt".format(SUPPORTED_LANGUAGES[lang]))
