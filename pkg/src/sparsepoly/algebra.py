"""Ring operations on sparse polynomials.

All functions are pure: operands are never mutated and results are fresh
values.  Binary operations require equal arities and take the left
operand's backend.  Exact zeros produced by cancellation are dropped
everywhere, preserving the no-stored-zeros invariant.
"""

from __future__ import annotations

import math

from .core import Exponents, SparsePoly
from .errors import ArityError, DomainError


def _require_same_arity(p: SparsePoly, q: SparsePoly) -> None:
    if p.arity != q.arity:
        raise ArityError(f"operand arities differ: {p.arity} != {q.arity}")


def add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Termwise sum; terms cancelling to exactly 0.0 vanish."""
    _require_same_arity(p, q)
    terms = dict(p._terms)
    for key, c in q._terms.items():
        s = terms.get(key, 0.0) + c
        if s == 0.0:
            terms.pop(key, None)
        else:
            terms[key] = s
    return SparsePoly._raw(terms, p.arity, p.backend)


def negate(p: SparsePoly) -> SparsePoly:
    return SparsePoly._raw({k: -c for k, c in p._terms.items()}, p.arity, p.backend)


def subtract(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return add(p, negate(q))


def multiply(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Polynomial product: coefficients of all term pairs accumulate at the
    componentwise sum of their exponent vectors."""
    _require_same_arity(p, q)
    a, b = p._terms, q._terms
    if len(a) < len(b):
        a, b = b, a
    out: dict[Exponents, float] = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = get(key, 0.0) + ca * cb
            if s == 0.0:
                out.pop(key, None)
            else:
                out[key] = s
    return SparsePoly._raw(out, p.arity, p.backend)


def power(p: SparsePoly, n: int) -> SparsePoly:
    """``p**n`` by iterated multiplication in ascending order; ``p**0`` is
    the unit polynomial."""
    if n < 0:
        raise DomainError(f"power requires a nonnegative exponent, got {n}")
    out = SparsePoly._raw({(0,) * p.arity: 1.0}, p.arity, p.backend)
    for _ in range(n):
        out = multiply(out, p)
    return out


def scalar_add(p: SparsePoly, c: float) -> SparsePoly:
    """Add the constant ``c`` (at the all-zeros exponent vector)."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"scalar {c!r} is not finite")
    if c == 0.0:
        return p
    terms = dict(p._terms)
    origin = (0,) * p.arity
    s = terms.get(origin, 0.0) + c
    if s == 0.0:
        terms.pop(origin, None)
    else:
        terms[origin] = s
    return SparsePoly._raw(terms, p.arity, p.backend)


def scalar_mul(p: SparsePoly, c: float) -> SparsePoly:
    """Scale every coefficient by ``c``; scaling by 0 gives the zero
    polynomial of the same arity."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"scalar {c!r} is not finite")
    if c == 0.0:
        return SparsePoly._raw({}, p.arity, p.backend)
    return SparsePoly._raw({k: v * c for k, v in p._terms.items()}, p.arity, p.backend)


def scalar_div(p: SparsePoly, c: float) -> SparsePoly:
    c = float(c)
    if c == 0.0:
        raise DomainError("division by zero")
    if not math.isfinite(c):
        raise ValueError(f"scalar {c!r} is not finite")
    return SparsePoly._raw({k: v / c for k, v in p._terms.items()}, p.arity, p.backend)


def wrap_mod(p: SparsePoly, n: int) -> SparsePoly:
    """Reduce every exponent into ``{0, ..., n-1}`` (mathematical modulo,
    nonnegative even for negative exponents), summing colliding terms.

    The coefficient sum is preserved up to float re-association, which is
    what makes this the periodic-boundary step for lattice walks.
    """
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    out: dict[Exponents, float] = {}
    for key, c in p._terms.items():
        wrapped = tuple(e % n for e in key)
        s = out.get(wrapped, 0.0) + c
        if s == 0.0:
            out.pop(wrapped, None)
        else:
            out[wrapped] = s
    return SparsePoly._raw(out, p.arity, p.backend)
