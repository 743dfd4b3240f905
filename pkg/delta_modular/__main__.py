import sys

from delta_modular.cli import main

if __name__ == '__main__':
    sys.exit(main())
