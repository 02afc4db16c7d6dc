# colours.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Terminal colouring for diagnostic lines. Colour codes are only emitted
# when the target stream is a terminal.

import sys

COLOURS = {
    "red": 31,
    "green": 32,
    "yellow": 33,
    "blue": 34,
    "dark-gray": 90,
}

# Presets used for the log levels
PRESETS = {
    "error": ["red", True],
    "warning": ["yellow", True],
    "info": ["green", False],
    "debug": ["blue", False],
    "none": [None, False],
}

enabled = True


def enable():
    global enabled
    enabled = True


def disable():
    global enabled
    enabled = False


def colourize16(string, fg_num=None, bold=False):
    """ Paint the text using the old 16 colour model. """

    if fg_num is not None:
        string = "\033[%dm%s\033[0m" % (fg_num, string)

    if bold:
        string = "\033[1m%s\033[0m" % string

    return string


def decorate_string(string, fg_colour=None, bold=False):
    if fg_colour is not None and fg_colour not in COLOURS:
        raise ValueError("Colour '{}' not supported".format(fg_colour))

    return colourize16(string, COLOURS.get(fg_colour), bold)


def is_terminal(stream):
    isatty = getattr(stream, 'isatty', None)
    return bool(isatty and isatty())


def decorate_with_preset(string, preset, stream=None):
    """
    Decorate a string with one of the PRESETS, leaving it untouched when
    colouring is disabled or the stream is not a terminal.

    Args:
        string (str): the text to decorate
        preset (str): a key of PRESETS
        stream (file): the stream the text will be written to,
            defaults to stderr

    Returns:
        str
    """

    stream = sys.stderr if stream is None else stream
    if not enabled or not is_terminal(stream):
        return string

    colour, bold = PRESETS.get(preset, PRESETS["none"])
    return decorate_string(string, colour, bold)
