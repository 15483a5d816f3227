"""Allow `python -m lightsout`."""

import sys

from .cli import main

sys.exit(main())
