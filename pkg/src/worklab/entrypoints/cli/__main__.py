import sys

from worklab.entrypoints.cli.app import main

sys.exit(main())
