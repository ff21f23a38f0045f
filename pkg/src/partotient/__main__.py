import sys

from partotient.cli import main

sys.exit(main())
