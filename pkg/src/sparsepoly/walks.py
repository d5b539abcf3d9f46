"""Lattice random walks with traps, and knight closed-walk counting.

A walk state is a polynomial whose coefficient at exponent vector
(i, j, ...) is the probability of the walker sitting at that node.  One
timestep multiplies the state by the transition kernel, wraps the result
onto the periodic n**d lattice, and annihilates the mass sitting on trap
nodes (in that order).

Closed knight walks are counted through the same machinery: the constant
term of the d-dimensional knight move polynomial raised to the m-th power
is the number of m-move excursions returning to the start.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import algebra
from .constructors import knight
from .core import Backend, DEFAULT_BACKEND, Exponents, SparsePoly
from .errors import ArityError, DomainError
from .views import coeffs, constant, sum_view

# Largest count exactly representable in a double.
_EXACT_COUNT_LIMIT = float(2**53)


@dataclass(frozen=True)
class WalkConfig:
    """Parameters of a trap-annihilated walk on the periodic lattice
    (Z/nZ)^d."""

    d: int
    n: int
    kernel: SparsePoly
    initial: Exponents
    traps: tuple[Exponents, ...] = ()
    steps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "traps", tuple(tuple(t) for t in self.traps))
        if self.d < 1:
            raise DomainError(f"lattice dimension must be >= 1, got {self.d}")
        if self.n < 1:
            raise DomainError(f"side length must be >= 1, got {self.n}")
        if self.steps < 0:
            raise DomainError(f"step count must be >= 0, got {self.steps}")
        if self.kernel.arity != self.d:
            raise ArityError(f"kernel arity {self.kernel.arity} != dimension {self.d}")
        if len(self.initial) != self.d:
            raise ArityError(f"initial point has {len(self.initial)} coordinates, expected {self.d}")
        for trap in self.traps:
            if len(trap) != self.d:
                raise ArityError(f"trap {trap} has {len(trap)} coordinates, expected {self.d}")
            if not all(0 <= t < self.n for t in trap):
                raise DomainError(f"trap {trap} outside lattice 0..{self.n - 1}")
        mass = math.fsum(c for _, c in self.kernel.items())
        if mass > 1.0 + 1e-12:
            raise DomainError(f"kernel coefficient sum {mass} exceeds 1")


def timestep(state: SparsePoly, cfg: WalkConfig) -> SparsePoly:
    """Advance one step: multiply by the kernel, wrap periodically, then
    zero out the trap nodes."""
    if state.arity != cfg.d:
        raise ArityError(f"state arity {state.arity} != dimension {cfg.d}")
    state = algebra.multiply(state, cfg.kernel)
    state = algebra.wrap_mod(state, cfg.n)
    if cfg.traps:
        state = state.set(cfg.traps, 0.0)
    return state


def run_walk(cfg: WalkConfig) -> tuple[SparsePoly, float]:
    """Iterate ``timestep`` from unit mass at the initial node.

    Returns the final state and the survival probability (the sum of the
    remaining coefficients); survival is non-increasing in the step count.
    """
    state = SparsePoly._raw({cfg.initial: 1.0}, cfg.d, cfg.kernel.backend)
    for _ in range(cfg.steps):
        state = timestep(state, cfg)
    return state, sum_view(coeffs(state))


def free_walk_pmf(initial: Exponents, kernel: SparsePoly, steps: int) -> SparsePoly:
    """Probability mass function after ``steps`` unconstrained steps from
    ``initial``: no wrapping, no traps."""
    initial = tuple(initial)
    if len(initial) != kernel.arity:
        raise ArityError(f"initial point has {len(initial)} coordinates, expected {kernel.arity}")
    start = SparsePoly._raw({initial: 1.0}, kernel.arity, kernel.backend)
    return algebra.multiply(start, algebra.power(kernel, steps))


def knight_closed_walks(
    d: int,
    moves: int,
    allow_pause: bool = False,
    backend: Backend = DEFAULT_BACKEND,
) -> float:
    """Number of ways a d-dimensional knight returns to its start in
    exactly ``moves`` moves (with ``allow_pause``, in at most that many:
    the piece may also stand still on any move)."""
    if moves < 0:
        raise DomainError(f"move count must be >= 0, got {moves}")
    gen = knight(d, backend)
    if allow_pause:
        gen = algebra.scalar_add(gen, 1.0)
    count = constant(algebra.power(gen, moves), drop=True)
    if count > _EXACT_COUNT_LIMIT:
        raise OverflowError(f"closed-walk count {count} exceeds exact double range")
    return count
