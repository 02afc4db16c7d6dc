# file_operations.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Utilities relating to file operations


import io
import json
import os
import shutil
import tempfile


def ensure_dir(directory):
    if directory and not os.path.exists(directory):
        os.makedirs(directory)


def read_file_contents(path):
    with io.open(path, encoding='utf-8') as infile:
        return infile.read()


def read_file_contents_as_lines(path):
    """
    Read a UTF-8 text file as stripped lines, skipping blank lines and
    lines starting with '#'.
    """

    with io.open(path, encoding='utf-8') as infile:
        lines = [line.strip() for line in infile]
    return [line for line in lines if line and not line.startswith('#')]


def write_file_contents(path, data):
    """
    Write text atomically: the data goes to a temporary file in the
    same directory which is then moved over path.
    """

    directory = os.path.dirname(os.path.abspath(path))
    ensure_dir(directory)

    with tempfile.NamedTemporaryFile(mode='w', dir=directory, delete=False,
                                     encoding='utf-8', newline='') as tmp_f:
        tmp_f.write(data)

    shutil.move(tmp_f.name, path)


def write_json(filepath, data, sort_keys=False):
    write_file_contents(
        filepath, json.dumps(data, indent=None, sort_keys=sort_keys) + "\n"
    )
