import sys

from minvar.cli import main

sys.exit(main())
