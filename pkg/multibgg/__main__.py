import sys

from multibgg.cli import main

sys.exit(main())
