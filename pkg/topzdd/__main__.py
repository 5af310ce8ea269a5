import sys

from topzdd.cli import main

sys.exit(main())
