import sys

from angdecomp.cli import main

sys.exit(main())
