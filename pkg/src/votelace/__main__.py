import sys

from votelace.cli import main

sys.exit(main())
