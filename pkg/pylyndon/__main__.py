import sys

from pylyndon.cli import main

sys.exit(main())
