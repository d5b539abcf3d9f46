"""Order-agnostic access to a polynomial's coefficients and indices.

The term map is iterated in an implementation-specific order (see
:class:`~sparsepoly.core.Backend`), so extracted coefficients cannot be
treated as a plainly ordered vector.  Views therefore carry an
``order_hash``, a digest of the exact (index, value) sequence at
extraction time: two views may be combined positionally only when their
hashes agree, which guarantees they came from the same extraction state.
A coefficient view and an index view taken from the same polynomial
always share a hash and align element-for-element.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Any

from .core import SparsePoly
from .errors import HashMismatchError


@dataclass(frozen=True)
class UnorderedView:
    """Immutable snapshot of view elements plus the order hash of the
    extraction they came from."""

    elements: tuple[Any, ...]
    order_hash: str

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _state_hash(p: SparsePoly) -> str:
    h = hashlib.sha256()
    for key, c in p.items():
        h.update(f"{key}:{c!r};".encode())
    return h.hexdigest()


def coeffs(p: SparsePoly) -> UnorderedView:
    """The stored coefficients, in backend iteration order."""
    return UnorderedView(tuple(c for _, c in p.items()), _state_hash(p))


def indices(p: SparsePoly) -> UnorderedView:
    """The stored exponent vectors, in backend iteration order."""
    return UnorderedView(tuple(key for key, _ in p.items()), _state_hash(p))


def same_order(v: UnorderedView, w: UnorderedView) -> bool:
    """Whether two views came from the same extraction state and may be
    combined positionally."""
    return v.order_hash == w.order_hash


def zip_views(v: UnorderedView, w: UnorderedView) -> list[tuple[Any, Any]]:
    """Pair up two views positionally; e.g. zipping an index view with a
    coefficient view reconstructs the polynomial's terms.

    Raises HashMismatchError when the views do not share an order hash.
    """
    if not same_order(v, w):
        raise HashMismatchError(
            f"views have different order hashes "
            f"({v.order_hash[:12]}... vs {w.order_hash[:12]}...)"
        )
    return list(zip(v.elements, w.elements))


def sum_view(v: UnorderedView) -> float:
    """Sum of a coefficient view, exact over the stored doubles and hence
    independent of iteration order."""
    return math.fsum(v.elements)


def constant(p: SparsePoly, drop: bool = True):
    """The coefficient at the all-zeros exponent vector (0.0 when absent).

    With ``drop=False`` the result is returned as a polynomial of the same
    arity instead of a scalar.
    """
    origin = (0,) * p.arity
    value = p._terms.get(origin, 0.0)
    if drop:
        return value
    terms = {origin: value} if value != 0.0 else {}
    return SparsePoly._raw(terms, p.arity, p.backend)
