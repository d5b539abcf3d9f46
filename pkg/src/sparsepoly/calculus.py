"""Evaluation, substitution and partial differentiation."""

from __future__ import annotations

import math
from typing import Sequence

from .core import Exponents, SparsePoly
from .errors import ArityError, DomainError, SingularityError


def _ipow(base: float, n: int) -> float:
    """base**n by repeated squaring; negative n via the reciprocal.

    Raises SingularityError for 0 raised to a negative power instead of
    returning an infinity.
    """
    if n == 0:
        return 1.0
    if base == 0.0 and n < 0:
        raise SingularityError("zero coordinate with negative exponent")
    if n < 0:
        base = 1.0 / base
        n = -n
    out = 1.0
    while n:
        if n & 1:
            out *= base
        base *= base
        n >>= 1
    return out


def evaluate(p: SparsePoly, point: Sequence[float]) -> float:
    """Value of ``p`` at the given coordinates (one per dimension)."""
    coords = [float(x) for x in point]
    if len(coords) != p.arity:
        raise ArityError(f"point has {len(coords)} coordinates, expected {p.arity}")
    parts = []
    for key, c in p._terms.items():
        t = c
        for x, e in zip(coords, key):
            if e:
                t *= _ipow(x, e)
        parts.append(t)
    return math.fsum(parts)


def substitute(p: SparsePoly, dim: int, value: float) -> SparsePoly:
    """Substitute ``value`` for dimension ``dim`` (1-based), returning a
    polynomial of arity one less.

    Each term's coefficient is scaled by ``value**exponent`` and the
    dimension is deleted from its exponent vector; remaining dimensions
    shift down and are relabelled positionally.  Colliding terms sum.
    """
    if not 1 <= dim <= p.arity:
        raise DomainError(f"dimension {dim} out of range 1..{p.arity}")
    if p.arity < 2:
        raise DomainError("substitution would leave a polynomial of arity 0")
    value = float(value)
    i = dim - 1
    out: dict[Exponents, float] = {}
    for key, c in p._terms.items():
        scaled = c * _ipow(value, key[i])
        if scaled == 0.0:
            continue
        short = key[:i] + key[i + 1 :]
        s = out.get(short, 0.0) + scaled
        if s == 0.0:
            out.pop(short, None)
        else:
            out[short] = s
    return SparsePoly._raw(out, p.arity - 1, p.backend)


def deriv(p: SparsePoly, dim: int, order: int = 1) -> SparsePoly:
    """Partial derivative along ``dim`` (1-based), applied ``order`` times.

    Follows the Laurent power rule, so d/dx of x^-1 is -x^-2; terms whose
    exponent reaches 0 drop out.  Order 0 returns the input unchanged.
    """
    if not 1 <= dim <= p.arity:
        raise DomainError(f"dimension {dim} out of range 1..{p.arity}")
    if order < 0:
        raise DomainError(f"derivative order must be nonnegative, got {order}")
    i = dim - 1
    terms = p._terms
    for _ in range(order):
        nxt: dict[Exponents, float] = {}
        for key, c in terms.items():
            e = key[i]
            if e == 0:
                continue
            nk = key[:i] + (e - 1,) + key[i + 1 :]
            s = nxt.get(nk, 0.0) + c * e
            if s == 0.0:
                nxt.pop(nk, None)
            else:
                nxt[nk] = s
        terms = nxt
    if terms is p._terms:
        return p
    return SparsePoly._raw(terms, p.arity, p.backend)


def aderiv(p: SparsePoly, orders: Sequence[int]) -> SparsePoly:
    """Mixed partial derivative: apply ``deriv`` along every dimension with
    the given orders.  Mixed partials commute, so composition order is
    immaterial."""
    orders = list(orders)
    if len(orders) != p.arity:
        raise ArityError(f"{len(orders)} orders given, expected {p.arity}")
    out = p
    for dim, order in enumerate(orders, start=1):
        out = deriv(out, dim, order)
    return out
