#!/usr/bin/env python

# setup.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU General Public License v2
#

from setuptools import setup
import os


def recursively_get_dirs(package_name, start_dir):

    start_path = os.path.join(package_name, start_dir)
    paths = []

    for root, dir, files in os.walk(start_path):
        for f in files:
            file_path = os.path.join(root, f)

            # package data is relative to the package directory
            if package_name:
                file_path = file_path.replace(package_name + "/", "")

            paths.append(file_path)

    return paths


def read_requirements():
    with open('requirements.txt') as f:
        lines = [line.strip() for line in f]

    runtime = ('docopt', 'numpy', 'PyYAML', 'scikit-learn', 'scipy',
               'snowballstemmer')
    return [line for line in lines if line.startswith(runtime)]


data = recursively_get_dirs("leadership_styles", "data")

setup(name='Leadership Styles',
      version='1.0.0',
      description='Perceived leadership styles of companies from tweets',
      author='Leadership Styles contributors',
      license='GPLv2',
      packages=['leadership_styles'],
      package_dir={'leadership_styles': 'leadership_styles'},
      scripts=['bin/leadership-styles'],
      package_data={
          'leadership_styles': data
      },
      install_requires=read_requirements(),
      python_requires='>=3.8',
      )
