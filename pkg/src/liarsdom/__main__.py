import sys

from liarsdom.cli import main

sys.exit(main())
