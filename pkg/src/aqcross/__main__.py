import sys

from aqcross.cli import main

sys.exit(main())
