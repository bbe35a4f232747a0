import sys

from _abelcodec.cli import main

if __name__ == "__main__":
    sys.exit(main())
