"""Deliberately naive dense reference implementations, used only by tests.

Polynomials are expanded into dense numpy arrays (one cell per exponent
vector inside the bounding box, with per-dimension offsets shifting
Laurent exponents nonnegative).  Multiplication is a full d-dimensional
convolution; the walk is evolved as a dense probability array with
``np.roll`` providing the periodic wrap.  Nothing here is shared with the
sparse code paths, so agreement between the two is a meaningful check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Backend, DEFAULT_BACKEND, SparsePoly
from .errors import CapacityError
from .walks import WalkConfig

#: Refuse bounding boxes with more cells than this.
MAX_CELLS = 10**6


@dataclass
class DenseArray:
    """Dense counterpart of a sparse polynomial.

    ``data[i0, i1, ...]`` holds the coefficient at exponent vector
    ``(i0 + offsets[0], i1 + offsets[1], ...)``.
    """

    offsets: tuple[int, ...]
    data: np.ndarray

    @property
    def extents(self) -> tuple[int, ...]:
        return self.data.shape


def _check_capacity(extents) -> None:
    cells = int(np.prod([int(e) for e in extents]))
    if cells > MAX_CELLS:
        raise CapacityError(f"bounding box of {cells} cells exceeds {MAX_CELLS}")


def to_dense(p: SparsePoly) -> DenseArray:
    """Expand into the minimal bounding box; the zero polynomial becomes a
    single all-zero cell."""
    if p.is_zero:
        return DenseArray((0,) * p.arity, np.zeros((1,) * p.arity))
    keys = list(p._terms)
    lo = [min(k[j] for k in keys) for j in range(p.arity)]
    hi = [max(k[j] for k in keys) for j in range(p.arity)]
    extents = tuple(h - l + 1 for l, h in zip(lo, hi))
    _check_capacity(extents)
    data = np.zeros(extents)
    for key, c in p._terms.items():
        data[tuple(e - l for e, l in zip(key, lo))] = c
    return DenseArray(tuple(lo), data)


def from_dense(a: DenseArray, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """Collect the nonzero cells back into a sparse polynomial."""
    terms = {}
    for cell in np.argwhere(a.data != 0.0):
        key = tuple(int(i) + off for i, off in zip(cell, a.offsets))
        terms[key] = float(a.data[tuple(cell)])
    return SparsePoly._raw(terms, a.data.ndim, backend)


def dense_multiply(a: DenseArray, b: DenseArray) -> DenseArray:
    """Full d-dimensional convolution; offsets add."""
    extents = tuple(ea + eb - 1 for ea, eb in zip(a.extents, b.extents))
    _check_capacity(extents)
    out = np.zeros(extents)
    for cell in np.argwhere(a.data != 0.0):
        window = tuple(slice(int(i), int(i) + e) for i, e in zip(cell, b.extents))
        out[window] += a.data[tuple(cell)] * b.data
    return DenseArray(tuple(oa + ob for oa, ob in zip(a.offsets, b.offsets)), out)


def dense_walk(cfg: WalkConfig) -> float:
    """Survival probability of the trap-annihilated periodic walk, evolved
    on a dense n**d probability array."""
    _check_capacity((cfg.n,) * cfg.d)
    moves = [(key, c) for key, c in cfg.kernel.items()]
    grid = np.zeros((cfg.n,) * cfg.d)
    grid[tuple(i % cfg.n for i in cfg.initial)] = 1.0
    axes = tuple(range(cfg.d))
    for _ in range(cfg.steps):
        grid = sum(c * np.roll(grid, shift, axis=axes) for shift, c in moves)
        for trap in cfg.traps:
            grid[trap] = 0.0
    return float(grid.sum())
