#!/usr/bin/env python3
"""Compatibility shim: `python main.py ...` == the `lacuna` console script.

The real CLI lives in lacuna/cli.py; install with `pip install -e .` and
run `lacuna omega --depth 6 --theta-table` from anywhere.
"""

import sys

from lacuna.cli import main

if __name__ == "__main__":
    sys.exit(main())
