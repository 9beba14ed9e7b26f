"""Module entry point: `python -m m0n` behaves like the `m0n` script."""

import sys

from .cli import main

sys.exit(main())
