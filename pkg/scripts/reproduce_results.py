#!/usr/bin/env python3
"""Recompute the headline results end to end and print a one-line-per-check report.

Equivalent to ``weylgrowth verify-paper``; kept as a script so the whole
reproduction is a single ``python scripts/reproduce_results.py`` away.
Pass ``--order 12`` for the quick gate, ``--output json`` for machines.
"""

import sys

from weylgrowth.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-paper", *sys.argv[1:]]))
