"""Module runner so `python -m cctrig` matches the installed script."""

import sys

from .cli import main

sys.exit(main())
