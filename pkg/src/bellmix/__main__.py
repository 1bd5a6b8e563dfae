import sys

from bellmix.cli import main

sys.exit(main())
