import sys

from symmetric_systems.app.cli import main

if __name__ == '__main__':
    sys.exit(main())
