import sys

from reesalg.cli import main

sys.exit(main())
