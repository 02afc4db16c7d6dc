# __main__.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#

import sys

from leadership_styles.cli import main

sys.exit(main())
