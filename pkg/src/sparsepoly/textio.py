"""Text rendering and parsing of sparse polynomials.

Two renderings are supported.  The *polyform* is a signed sum of
monomials:

    -3*z -3*y +13*z^2 -3*x +17*x^6*y^-7*z^8

Coefficients of +-1 on non-constant terms are omitted ("+x", "-x*y*z"),
"^1" is never written, exponents may be negative, and a positive constant
term at the front is written bare ("1 +3*x ...").  The zero polynomial
renders as "the NULL multinomial of arity N".  The *array form* is an
aligned index/value table with a "val" header, one row per term.

``parse`` inverts the polyform (it also accepts parenthesized exponents
like "y^(-7)" and the NULL-multinomial line), so render/parse round-trips
reproduce the polynomial exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .core import Backend, DEFAULT_BACKEND, Exponents, SparsePoly
from .errors import ArityError, FormatError, ParseError, UnknownVariableError


@dataclass(frozen=True)
class FormatOptions:
    """Rendering options.

    ``variable_names`` defaults to x, y, z for arity <= 3 and x1, x2, ...
    otherwise; a longer table than the arity is fine, extra names are
    ignored.  With ``sort_terms`` the output lists terms in lexicographic
    index order (canonical across backends); without it, in backend
    iteration order.
    """

    polyform: bool = True
    variable_names: tuple[str, ...] | None = None
    sort_terms: bool = True


_DEFAULT_OPTIONS = FormatOptions()

_NULL_RE = re.compile(r"^the NULL multinomial of arity (\d+)$")


def _names_for(arity: int, opts: FormatOptions) -> tuple[str, ...]:
    if opts.variable_names is not None:
        names = tuple(opts.variable_names)
        if len(names) < arity:
            raise FormatError(f"{len(names)} variable names given but arity is {arity}")
        return names[:arity]
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple(f"x{i}" for i in range(1, arity + 1))


def _num(c: float) -> str:
    # shortest round-trip decimal; integral values print without ".0"
    if c == int(c) and abs(c) <= 2**53:
        return str(int(c))
    return repr(c)


def _ordered_terms(p: SparsePoly, opts: FormatOptions) -> list[tuple[Exponents, float]]:
    items = list(p.items())
    if opts.sort_terms:
        items.sort(key=lambda kv: kv[0])
    return items


def render(p: SparsePoly, opts: FormatOptions = _DEFAULT_OPTIONS) -> str:
    """Render ``p`` as polyform text or as an index/value table."""
    if p.is_zero:
        return f"the NULL multinomial of arity {p.arity}"
    if opts.polyform:
        return _render_polyform(p, opts)
    return _render_table(p, opts)


def _render_polyform(p: SparsePoly, opts: FormatOptions) -> str:
    names = _names_for(p.arity, opts)
    parts = []
    for pos, (key, c) in enumerate(_ordered_terms(p, opts)):
        if not any(key):
            if c > 0:
                parts.append(_num(c) if pos == 0 else f"+{_num(c)}")
            else:
                parts.append(f"-{_num(-c)}")
            continue
        factors = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, key)
            if e != 0
        )
        if c == 1.0:
            parts.append(f"+{factors}")
        elif c == -1.0:
            parts.append(f"-{factors}")
        elif c > 0:
            parts.append(f"+{_num(c)}*{factors}")
        else:
            parts.append(f"-{_num(-c)}*{factors}")
    return " ".join(parts)


def _render_table(p: SparsePoly, opts: FormatOptions) -> str:
    items = _ordered_terms(p, opts)
    widths = [
        max(len(str(key[j])) for key, _ in items) for j in range(p.arity)
    ]
    val_width = max(len(_num(c)) for _, c in items)
    val_width = max(val_width, len("val"))
    lines = []
    for key, c in items:
        cells = " ".join(str(e).rjust(w) for e, w in zip(key, widths))
        lines.append(f" {cells}  =  {_num(c).rjust(val_width)}")
    header = "val".rjust(len(lines[0]))
    return "\n".join([header] + lines)


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
      | (?P<name>[^\W\d]\w*)
      | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, arity: int, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)
        self.dims = {name: d for d, name in enumerate(names)}
        self.arity = arity

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok[2] if tok else self.end)

    def parse(self) -> list[tuple[Exponents, float]]:
        terms = []
        first = True
        while self.peek() is not None:
            sign = 1.0
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                sign = -1.0 if text == "-" else 1.0
            elif not first:
                self.fail("expected '+' or '-' between terms")
            terms.append(self.parse_term(sign))
            first = False
        if first:
            raise ParseError("empty polynomial text", 0)
        return terms

    def parse_term(self, sign: float) -> tuple[Exponents, float]:
        coeff = sign
        exps = [0] * self.arity
        tok = self.peek()
        if tok is None:
            self.fail("expected a term")
        kind, text, _ = tok
        if kind == "number":
            self.take()
            coeff *= float(text)
            nxt = self.peek()
            if nxt is None or not (nxt[0] == "op" and nxt[1] == "*"):
                return tuple(exps), coeff  # bare constant
            self.take()
            self.parse_factor(exps)
        elif kind == "name":
            self.parse_factor(exps)
        else:
            self.fail("expected a coefficient or variable")
        while True:
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "*":
                self.take()
                self.parse_factor(exps)
            else:
                break
        return tuple(exps), coeff

    def parse_factor(self, exps: list[int]) -> None:
        tok = self.peek()
        if tok is None or tok[0] != "name":
            self.fail("expected a variable name")
        self.take()
        _, name, pos = tok
        dim = self.dims.get(name)
        if dim is None:
            raise UnknownVariableError(f"unknown variable {name!r}", pos)
        e = 1
        nxt = self.peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
            self.take()
            e = self.parse_exponent()
        exps[dim] += e

    def parse_exponent(self) -> int:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "(":
            self.take()
            value = self.parse_signed_int()
            closing = self.take()
            if closing is None or closing[0] != "op" or closing[1] != ")":
                self.fail("expected ')' after exponent")
            return value
        return self.parse_signed_int()

    def parse_signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        tok = self.peek()
        if tok is None or tok[0] != "number":
            self.fail("expected an integer exponent")
        self.take()
        if not tok[1].isdigit():
            raise ParseError(f"exponent {tok[1]!r} is not an integer", tok[2])
        return sign * int(tok[1])


def parse(
    text: str,
    arity: int,
    opts: FormatOptions = _DEFAULT_OPTIONS,
    backend: Backend = DEFAULT_BACKEND,
) -> SparsePoly:
    """Parse polyform text into a polynomial of the given arity.

    Repeated monomials sum; terms cancelling to zero are dropped.  Raises
    ParseError (with position) on bad syntax and UnknownVariableError for
    names outside the active table.
    """
    m = _NULL_RE.match(text.strip())
    if m:
        stated = int(m.group(1))
        if stated != arity:
            raise ArityError(f"text declares arity {stated}, expected {arity}")
        return SparsePoly((), (), arity, backend)
    names = _names_for(arity, opts)
    terms = _Parser(text, arity, names).parse()
    return SparsePoly(
        [key for key, _ in terms], [c for _, c in terms], arity, backend
    )
