# logging.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#

'''
Package wide logger.

Every record can go to two places, each with its own threshold:
  - the log file, one JSON object per line (the "log level")
  - stderr, one "<level>: <message>" line (the "output level")

The thresholds come from the LOG_LEVEL and OUTPUT_LEVEL environment
variables, then from the YAML file CONF_FILE, then from the defaults.
'''

import json
import os
import sys
import time

import yaml

from leadership_styles.colours import decorate_with_preset

LOG_ENV = "LOG_LEVEL"
OUTPUT_ENV = "OUTPUT_LEVEL"
FORCE_FLUSH_ENV = "LEADERSHIP_LOG_FORCE_FLUSH"

CONF_DIR = os.path.join(os.path.expanduser('~'), '.leadership-styles')
CONF_FILE = os.path.join(CONF_DIR, 'logs.conf')
LOGS_DIR = os.path.join(CONF_DIR, 'logs')

DEFAULT_LOG_LEVEL = "none"
DEFAULT_OUTPUT_LEVEL = "warning"

LEVELS = {
    "none": 0,
    "error": 1,
    "warning": 2,
    "info": 3,
    "debug": 4
}


def normalise_level(level):
    '''
    Normalise the input string, i.e.
    convert it into lowercase and see if it matches with
    the specified levels held in the dict LEVELS.
    It will try to match the input to the first n chars
    of the dict. ex 'd', 'de' is turned into debug.
    '''

    if not level:
        return "none"

    level = str(level).lower()
    for name in LEVELS:
        if level == name[0:len(level)]:
            return name

    return "none"


class Logger(object):
    def __init__(self, stream=None):
        self._log_file = None
        self._app_name = None
        self._force_flush = False
        self._pid = os.getpid()
        self._stream = stream

        self._cached_log_level = None
        self._cached_output_level = None

        log = os.getenv(LOG_ENV)
        if log is not None:
            self._cached_log_level = normalise_level(log)

        output = os.getenv(OUTPUT_ENV)
        if output is not None:
            self._cached_output_level = normalise_level(output)

        if os.getenv(FORCE_FLUSH_ENV) is not None:
            self._force_flush = True

    def _load_conf(self):
        conf = None
        if os.path.exists(CONF_FILE):
            try:
                with open(CONF_FILE, "r") as f:
                    conf = yaml.safe_load(f)
            except (IOError, OSError, yaml.YAMLError):
                conf = None

        if not isinstance(conf, dict):
            conf = {}

        if self._cached_log_level is None:
            self._cached_log_level = normalise_level(
                conf.get("log_level", DEFAULT_LOG_LEVEL)
            )

        if self._cached_output_level is None:
            self._cached_output_level = normalise_level(
                conf.get("output_level", DEFAULT_OUTPUT_LEVEL)
            )

    def get_log_level(self):
        if self._cached_log_level is None:
            self._load_conf()

        return self._cached_log_level

    def get_output_level(self):
        if self._cached_output_level is None:
            self._load_conf()

        return self._cached_output_level

    def force_log_level(self, level):
        normalised = normalise_level(level)
        if LEVELS[self.get_log_level()] < LEVELS[normalised]:
            self._cached_log_level = normalised

    def force_output_level(self, level):
        normalised = normalise_level(level)
        if LEVELS[self.get_output_level()] < LEVELS[normalised]:
            self._cached_output_level = normalised

    def set_output_level(self, level):
        self._cached_output_level = normalise_level(level)

    def set_app_name(self, name):
        self._app_name = os.path.basename(name.strip()).lower().replace(" ", "_")
        if self._log_file is not None:
            self._log_file.close()
            self._log_file = None

    def write(self, msg, force_flush=False, **kwargs):
        lname = normalise_level(kwargs.pop("level", "info"))

        level = LEVELS[lname]
        sys_log_level = LEVELS[self.get_log_level()]
        sys_output_level = LEVELS[self.get_output_level()]

        if level == 0 or (level > sys_log_level and level > sys_output_level):
            return

        if self._app_name is None:
            try:
                self.set_app_name(sys.argv[0] or 'leadership-styles')
            except (AttributeError, IndexError):
                self.set_app_name('leadership-styles')

        # one record, one line: the stderr contract depends on it
        message = " ".join(str(msg).split())

        if level <= sys_log_level:
            log = {}
            log["pid"] = self._pid
            log.update(kwargs)
            log["level"] = lname
            log["time"] = time.time()
            log["message"] = message

            if self._log_file is None:
                self._init_log_file()
            self._log_file.write("{}\n".format(
                json.dumps(log, default=str, sort_keys=True)
            ))

            if self._force_flush or force_flush:
                self.flush()

        if level <= sys_output_level:
            stream = self._stream if self._stream is not None else sys.stderr
            stream.write("{}: {}\n".format(
                decorate_with_preset(lname, lname, stream), message
            ))

    def error(self, msg, **kwargs):
        kwargs["level"] = "error"
        self.write(msg, **kwargs)

    def warn(self, msg, **kwargs):
        kwargs["level"] = "warning"
        self.write(msg, **kwargs)

    def info(self, msg, **kwargs):
        kwargs["level"] = "info"
        self.write(msg, **kwargs)

    def debug(self, msg, **kwargs):
        kwargs["level"] = "debug"
        self.write(msg, **kwargs)

    def flush(self):
        if self._log_file and not self._log_file.closed:
            self._log_file.flush()

        stream = self._stream if self._stream is not None else sys.stderr
        stream.flush()

    def _init_log_file(self):
        if self._log_file is not None:
            self._log_file.close()

        if not os.path.exists(LOGS_DIR):
            os.makedirs(LOGS_DIR)

        log_fn = os.path.join(LOGS_DIR, "{}.log".format(self._app_name))
        self._log_file = open(log_fn, "a")


logger = Logger()


def read_logs(app):
    '''
    Read back the records of one application's log file.

    Args:
        app (str): the application name used for the log file

    Returns:
        list: the decoded records, unreadable lines skipped
    '''

    records = []
    log_path = os.path.join(LOGS_DIR, "{}.log".format(app))
    if not os.path.isfile(log_path):
        return records

    with open(log_path, "r") as f:
        for line in f:
            try:
                records.append(json.loads(line))
            except ValueError:
                # unable to read the line, skip it
                pass

    return records
