import sys

from mincode.cli import main

sys.exit(main())
