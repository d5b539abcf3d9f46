#!/usr/bin/env python3
"""Ordered-vs-hashed backend timings on knight powers (CSV on stdout).

Thin wrapper over the `sparsepoly bench` subcommand so the comparison is
reproducible from a checkout.
"""

import sys

from sparsepoly.cli import main

if __name__ == "__main__":
    sys.exit(main(["bench", "--op", "power", "--dim", "4", "--moves", "6", "--repeat", "3"]))
