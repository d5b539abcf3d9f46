#!/usr/bin/env python3
"""Closed-walk counts for d-dimensional knights, with wall times."""

import time

import sparsepoly as sp

CASES = [
    (2, 6, False),
    (3, 6, False),
    (4, 6, False),
    (4, 6, True),
]


def main():
    print(f"{'dim':>3} {'moves':>5} {'pause':>5} {'count':>12} {'seconds':>8}")
    for d, moves, pause in CASES:
        start = time.perf_counter()
        count = sp.knight_closed_walks(d, moves, pause)
        elapsed = time.perf_counter() - start
        print(f"{d:>3} {moves:>5} {str(pause):>5} {int(count):>12} {elapsed:>8.3f}")


if __name__ == "__main__":
    main()
