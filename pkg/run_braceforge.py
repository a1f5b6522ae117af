#!/usr/bin/env python3
"""
braceforge command-line entry script
"""
import os
import sys

# put the project root on the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from braceforge import cli


def main():
    """Runs one braceforge verb and exits with its code (0 ok, 1 certified "no", 2 bad input)"""
    sys.exit(cli.run(sys.argv[1:]))


if __name__ == '__main__':
    main()
