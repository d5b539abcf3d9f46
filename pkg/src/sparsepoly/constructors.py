"""Named constructors for frequently used polynomials."""

from __future__ import annotations

import random
from typing import Sequence

from .core import Backend, DEFAULT_BACKEND, Exponents, SparsePoly
from .errors import DomainError


def zero(a: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The zero polynomial of arity ``a`` (an empty term map)."""
    if a < 1:
        raise DomainError(f"arity must be >= 1, got {a}")
    return SparsePoly._raw({}, a, backend)


def unit(a: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The constant polynomial 1 of arity ``a``."""
    if a < 1:
        raise DomainError(f"arity must be >= 1, got {a}")
    return SparsePoly._raw({(0,) * a: 1.0}, a, backend)


def lone(i: int, a: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The single variable ``x_i`` (1-based) among ``a`` variables."""
    if a < 1:
        raise DomainError(f"arity must be >= 1, got {a}")
    if not 1 <= i <= a:
        raise DomainError(f"variable index {i} out of range 1..{a}")
    key = tuple(1 if j == i - 1 else 0 for j in range(a))
    return SparsePoly._raw({key: 1.0}, a, backend)


def linear(coeffs: Sequence[float], backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The linear form ``sum_i coeffs[i] * x_i`` with arity len(coeffs)."""
    coeffs = list(coeffs)
    if not coeffs:
        raise DomainError("linear needs at least one coefficient")
    a = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        if c != 0:
            key = tuple(1 if j == i else 0 for j in range(a))
            terms[key] = float(c)
    return SparsePoly._raw(terms, a, backend)


def xyz(a: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The product of all ``a`` variables (every exponent 1)."""
    if a < 1:
        raise DomainError(f"arity must be >= 1, got {a}")
    return SparsePoly._raw({(1,) * a: 1.0}, a, backend)


def homog(d: int, n: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """All monomials of total degree ``n`` in ``d`` variables, each with
    coefficient 1; C(n+d-1, d-1) terms."""
    if d < 1:
        raise DomainError(f"arity must be >= 1, got {d}")
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    terms = {key: 1.0 for key in _compositions(n, d)}
    return SparsePoly._raw(terms, d, backend)


def _compositions(total: int, parts: int):
    """Yield all tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def rspray(
    n_rows: int = 7,
    arity: int = 3,
    max_exponent: int = 2,
    max_value: int = 9,
    seed: int | None = None,
    backend: Backend = DEFAULT_BACKEND,
) -> SparsePoly:
    """A random polynomial: ``n_rows`` index rows drawn uniformly from
    {0..max_exponent}^arity with integer values in 1..max_value.

    Repeated rows sum, so the result may have fewer than ``n_rows`` terms.
    Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    rows = [
        tuple(rng.randint(0, max_exponent) for _ in range(arity)) for _ in range(n_rows)
    ]
    values = [float(rng.randint(1, max_value)) for _ in range(n_rows)]
    return SparsePoly(rows, values, arity, backend)


def knight(d: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """Move polynomial of a d-dimensional knight: every exponent vector
    with one entry +-2, another entry +-1 and zeros elsewhere, coefficient
    1.  That is 4*d*(d-1) terms; d=2 gives the chess knight's 8 moves."""
    if d < 2:
        raise DomainError(f"a knight needs at least 2 dimensions, got {d}")
    terms: dict[Exponents, float] = {}
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for two in (2, -2):
                for one in (1, -1):
                    move = [0] * d
                    move[i] = two
                    move[j] = one
                    terms[tuple(move)] = 1.0
    return SparsePoly._raw(terms, d, backend)


def walk_kernel(d: int, backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """One-step transition polynomial on the d-dimensional lattice: stay
    put or move to one of the 2d adjacent nodes, each with probability
    1/(2d+1)."""
    if d < 1:
        raise DomainError(f"dimension must be >= 1, got {d}")
    prob = 1.0 / (2 * d + 1)
    terms: dict[Exponents, float] = {(0,) * d: prob}
    for i in range(d):
        for step in (1, -1):
            move = [0] * d
            move[i] = step
            terms[tuple(move)] = prob
    return SparsePoly._raw(terms, d, backend)


def cyclic_squares(backend: Backend = DEFAULT_BACKEND) -> SparsePoly:
    """The 26-variable cyclic sum a*b^2 + b*c^2 + ... + y*z^2 + z*a^2."""
    terms: dict[Exponents, float] = {}
    for i in range(26):
        key = [0] * 26
        key[i] = 1
        key[(i + 1) % 26] = 2
        terms[tuple(key)] = 1.0
    return SparsePoly._raw(terms, 26, backend)
