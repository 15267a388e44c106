import sys

from aesmix.cli import main

sys.exit(main())
