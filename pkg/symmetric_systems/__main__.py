import sys

from symmetric_systems.app.cli import main

sys.exit(main())
