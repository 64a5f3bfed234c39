import sys

from toughore.cli import main

sys.exit(main())
