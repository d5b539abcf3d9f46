"""Sparse multivariate Laurent polynomial toolkit.

Polynomials are stored as maps from signed integer exponent vectors to
nonzero coefficients, support full ring arithmetic and calculus, and back
two worked applications: trap-annihilated random walks on periodic
lattices and d-dimensional knight closed-walk counting.
"""

from .algebra import (
    add,
    multiply,
    negate,
    power,
    scalar_add,
    scalar_div,
    scalar_mul,
    subtract,
    wrap_mod,
)
from .calculus import aderiv, deriv, evaluate, substitute
from .constructors import (
    cyclic_squares,
    homog,
    knight,
    linear,
    lone,
    rspray,
    unit,
    walk_kernel,
    xyz,
    zero,
)
from .core import (
    Backend,
    DEFAULT_BACKEND,
    Exponents,
    SparsePoly,
    arity,
    equals,
    is_zero,
    new_spray,
    num_terms,
)
from .errors import (
    ArityError,
    CapacityError,
    DomainError,
    FormatError,
    HashMismatchError,
    ParseError,
    SingularityError,
    UnknownVariableError,
)
from .textio import FormatOptions, parse, render
from .views import (
    UnorderedView,
    coeffs,
    constant,
    indices,
    same_order,
    sum_view,
    zip_views,
)
from .walks import (
    WalkConfig,
    free_walk_pmf,
    knight_closed_walks,
    run_walk,
    timestep,
)

__all__ = [
    "ArityError",
    "Backend",
    "CapacityError",
    "DEFAULT_BACKEND",
    "DomainError",
    "Exponents",
    "FormatError",
    "FormatOptions",
    "HashMismatchError",
    "ParseError",
    "SingularityError",
    "SparsePoly",
    "UnknownVariableError",
    "UnorderedView",
    "WalkConfig",
    "add",
    "aderiv",
    "arity",
    "coeffs",
    "constant",
    "cyclic_squares",
    "deriv",
    "equals",
    "evaluate",
    "free_walk_pmf",
    "homog",
    "indices",
    "is_zero",
    "knight",
    "knight_closed_walks",
    "linear",
    "lone",
    "multiply",
    "negate",
    "new_spray",
    "num_terms",
    "parse",
    "power",
    "render",
    "rspray",
    "run_walk",
    "same_order",
    "scalar_add",
    "scalar_div",
    "scalar_mul",
    "subtract",
    "substitute",
    "sum_view",
    "timestep",
    "unit",
    "walk_kernel",
    "wrap_mod",
    "xyz",
    "zero",
    "zip_views",
]

__version__ = "0.1.0"
