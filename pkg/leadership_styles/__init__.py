# __init__.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Perceived leadership styles from short social media texts.

__version__ = '1.0.0'
