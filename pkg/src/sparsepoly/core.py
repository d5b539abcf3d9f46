"""Sparse Laurent polynomials keyed by signed integer exponent vectors.

A polynomial of arity ``d`` is a map from length-``d`` tuples of signed
integers (the exponent of each variable) to nonzero float coefficients:

    x*y^3 + 2*x^2*y^2  ->  {(1, 3): 1.0, (2, 2): 2.0}    (arity 2)

Negative exponents are permitted throughout, so these are Laurent
polynomials.  Three invariants hold for every :class:`SparsePoly`:

  * every key has length equal to the polynomial's arity;
  * no stored coefficient is exactly ``0.0`` (zeros are deleted, so the
    zero polynomial is an empty map with a definite arity);
  * each exponent vector appears at most once.

Values are immutable from the caller's perspective: every operation
returns a new polynomial, and instances may be shared freely between
threads.

Two storage backends are offered.  They hold the same ``dict`` either
way; the choice only fixes the *iteration* order seen by views and
printing: ``Backend.ORDERED`` iterates keys in lexicographic order,
``Backend.HASHED`` in an unspecified, operation-dependent order.
Polynomials with equal term sets compare equal regardless of backend.
"""

from __future__ import annotations

import enum
import math
import operator
from typing import Iterable, Iterator, Sequence

from .errors import ArityError

# One exponent per dimension; a key of the term map.
Exponents = tuple[int, ...]


class Backend(enum.Enum):
    """Associative-container strategy for the term map."""

    ORDERED = "ordered"
    HASHED = "hashed"

    @classmethod
    def parse(cls, name: str) -> "Backend":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown backend {name!r}; expected 'ordered' or 'hashed'") from None


#: Backend used when none is requested (hashed lookups are the fast path).
DEFAULT_BACKEND = Backend.HASHED


def _check_row(row: Sequence[int], arity: int) -> Exponents:
    try:
        t = tuple(operator.index(e) for e in row)
    except TypeError:
        raise ValueError(f"index row {row!r} contains non-integer exponents") from None
    if len(t) != arity:
        raise ArityError(f"index row {t} has length {len(t)}, expected arity {arity}")
    return t


def _is_index(x) -> bool:
    try:
        operator.index(x)
    except TypeError:
        return False
    return True


def _check_value(v: float) -> float:
    f = float(v)
    if not math.isfinite(f):
        raise ValueError(f"coefficient {v!r} is not finite")
    return f


class SparsePoly:
    """A sparse multivariate Laurent polynomial.

    Supports the usual operators (``+ - * / **``, with int/float scalars
    accepted where meaningful) and element access by exponent vector:
    ``p[0, 0, 2]`` returns the stored coefficient or ``0.0``.
    """

    __slots__ = ("_terms", "_arity", "_backend")

    def __init__(
        self,
        rows: Iterable[Sequence[int]] = (),
        values: Iterable[float] | None = None,
        arity: int | None = None,
        backend: Backend = DEFAULT_BACKEND,
    ):
        rows = list(rows)
        if arity is None:
            if not rows:
                raise ArityError("arity is required when no index rows are given")
            arity = len(tuple(rows[0]))
        if not isinstance(arity, int) or arity < 1:
            raise ArityError(f"arity must be a positive integer, got {arity!r}")
        if values is None:
            vals = [1.0] * len(rows)
        else:
            vals = [_check_value(v) for v in values]
            if not vals and rows:
                vals = [1.0] * len(rows)
            elif len(vals) != len(rows):
                raise ValueError(f"{len(rows)} index rows but {len(vals)} values")
        terms: dict[Exponents, float] = {}
        for row, v in zip(rows, vals):
            key = _check_row(row, arity)
            s = terms.get(key, 0.0) + v
            if s == 0.0:
                terms.pop(key, None)
            else:
                terms[key] = s
        self._terms = terms
        self._arity = arity
        self._backend = backend

    @classmethod
    def _raw(cls, terms: dict[Exponents, float], arity: int, backend: Backend) -> "SparsePoly":
        """Wrap an already-canonical term map without copying or checking."""
        p = object.__new__(cls)
        p._terms = terms
        p._arity = arity
        p._backend = backend
        return p

    # -- inspection ---------------------------------------------------

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def backend(self) -> Backend:
        return self._backend

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[Exponents, float]]:
        """Yield (exponents, coefficient) pairs in backend iteration order."""
        if self._backend is Backend.ORDERED:
            for key in sorted(self._terms):
                yield key, self._terms[key]
        else:
            yield from self._terms.items()

    def keys(self) -> Iterator[Exponents]:
        for key, _ in self.items():
            yield key

    def with_backend(self, backend: Backend) -> "SparsePoly":
        if backend is self._backend:
            return self
        return SparsePoly._raw(dict(self._terms), self._arity, backend)

    # -- element access -----------------------------------------------

    def get(self, idx: Sequence[int]) -> float:
        """Coefficient stored at ``idx``, or 0.0 when absent."""
        return self._terms.get(_check_row(idx, self._arity), 0.0)

    def __getitem__(self, idx: Sequence[int]) -> float:
        return self.get(idx)

    def set(self, rows: Iterable[Sequence[int]], value: float) -> "SparsePoly":
        """Copy of self with every listed index set to ``value``.

        Existing entries are overwritten and new ones created; setting 0.0
        deletes the entries.  A single flat exponent vector is accepted in
        place of a one-row list.
        """
        rows = list(rows)
        if rows and all(_is_index(e) for e in rows):
            rows = [rows]  # a lone index row was passed directly
        v = _check_value(value)
        terms = dict(self._terms)
        for row in rows:
            key = _check_row(row, self._arity)
            if v == 0.0:
                terms.pop(key, None)
            else:
                terms[key] = v
        return SparsePoly._raw(terms, self._arity, self._backend)

    # -- comparison ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic (implementations live in .algebra) ------------------

    def __add__(self, other):
        from . import algebra

        if isinstance(other, SparsePoly):
            return algebra.add(self, other)
        if isinstance(other, (int, float)):
            return algebra.scalar_add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        from . import algebra

        return algebra.negate(self)

    def __sub__(self, other):
        from . import algebra

        if isinstance(other, SparsePoly):
            return algebra.subtract(self, other)
        if isinstance(other, (int, float)):
            return algebra.scalar_add(self, -other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        from . import algebra

        if isinstance(other, SparsePoly):
            return algebra.multiply(self, other)
        if isinstance(other, (int, float)):
            return algebra.scalar_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        from . import algebra

        if isinstance(other, (int, float)):
            return algebra.scalar_div(self, other)
        return NotImplemented

    def __pow__(self, n):
        from . import algebra

        if isinstance(n, int):
            return algebra.power(self, n)
        return NotImplemented

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        from . import textio

        return textio.render(self)

    def __repr__(self) -> str:
        return (
            f"SparsePoly({self.num_terms} terms, arity={self._arity}, "
            f"backend={self._backend.value})"
        )


def new_spray(
    index_rows: Iterable[Sequence[int]],
    values: Iterable[float] | None = None,
    arity: int | None = None,
    backend: Backend = DEFAULT_BACKEND,
) -> SparsePoly:
    """Build a polynomial from index rows and values.

    Repeated rows are combined by summing their values, and any sum of
    exactly 0.0 is dropped.  An empty or missing ``values`` means every
    row gets coefficient 1.  The input row order is not preserved.
    """
    return SparsePoly(index_rows, values, arity, backend)


def equals(p: SparsePoly, q: SparsePoly) -> bool:
    """True iff arities match and the term multisets are identical,
    independent of backend or construction order."""
    return p == q


def num_terms(p: SparsePoly) -> int:
    return p.num_terms


def is_zero(p: SparsePoly) -> bool:
    return p.is_zero


def arity(p: SparsePoly) -> int:
    return p.arity
