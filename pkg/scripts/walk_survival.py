#!/usr/bin/env python3
"""Survival probability of a walker on a 17x17 periodic lattice with two
traps, printed every ten steps (unit mass starts at (10, 10))."""

import sparsepoly as sp

CFG = sp.WalkConfig(
    d=2,
    n=17,
    kernel=sp.walk_kernel(2),
    initial=(10, 10),
    traps=((2, 3), (3, 5)),
    steps=100,
)


def main():
    state = sp.new_spray([CFG.initial], [1.0])
    print(f"{'step':>4} {'survival':>10} {'support':>8}")
    for step in range(1, CFG.steps + 1):
        state = sp.timestep(state, CFG)
        if step % 10 == 0:
            survival = sp.sum_view(sp.coeffs(state))
            print(f"{step:>4} {survival:>10.7f} {state.num_terms:>8}")


if __name__ == "__main__":
    main()
