"""Exact arithmetic in four concrete commutative rings.

Supported rings: arbitrary-precision integers, modular residues Z/n,
sparse multivariate polynomials with integer coefficients, and the
3-dimensional algebra Z[x,y]/(x^2, xy, y^2) ("nil plane").

All values are immutable; every operation returns a fresh value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Mapping

__all__ = [
    "RingMismatchError",
    "ParseError",
    "Ring",
    "IntegerRing",
    "ModularRing",
    "PolynomialRing",
    "NilPlaneRing",
    "RingValue",
    "ZZ",
    "poly_substitute",
    "parse_value",
]


class RingMismatchError(ValueError):
    """Raised when operands come from different rings."""


class ParseError(ValueError):
    """Raised on malformed ring-element text."""


@dataclass(frozen=True)
class Ring:
    """Base descriptor; concrete rings subclass this."""

    def zero(self) -> "RingValue":
        return self.from_int(0)

    def one(self) -> "RingValue":
        return self.from_int(1)

    def from_int(self, n: int) -> "RingValue":
        raise NotImplementedError

    def _add(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def _neg(self, a: Any) -> Any:
        raise NotImplementedError

    def _mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def _is_zero(self, a: Any) -> bool:
        raise NotImplementedError

    def _render(self, a: Any) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(Ring):
    def from_int(self, n: int) -> "RingValue":
        return RingValue(self, int(n))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _render(self, a):
        return str(a)


@dataclass(frozen=True)
class ModularRing(Ring):
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if self.modulus > 2**64 - 1:
            raise ValueError("modulus too large")

    def from_int(self, n: int) -> "RingValue":
        return RingValue(self, int(n) % self.modulus)

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _is_zero(self, a):
        return a == 0

    def _render(self, a):
        return str(a)


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Sparse polynomials over Z in a fixed ordered tuple of variables.

    Payload: tuple of (exponent-vector, nonzero int coefficient) pairs,
    sorted in descending graded-lex order.  The representation is
    canonical, so payload equality is ring equality.
    """

    variables: tuple

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        if any(not v for v in self.variables):
            raise ValueError("variable names must be nonempty")

    def from_int(self, n: int) -> "RingValue":
        n = int(n)
        if n == 0:
            return RingValue(self, ())
        zero_exp = (0,) * len(self.variables)
        return RingValue(self, ((zero_exp, n),))

    def gen(self, name: str) -> "RingValue":
        i = self.variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return RingValue(self, ((exps, 1),))

    def gens(self) -> dict:
        return {v: self.gen(v) for v in self.variables}

    def _canon(self, terms: dict) -> tuple:
        items = [(e, c) for e, c in terms.items() if c != 0]
        items.sort(key=lambda t: _grlex_key(t[0]), reverse=True)
        return tuple(items)

    def _add(self, a, b):
        terms = dict(a)
        for e, c in b:
            terms[e] = terms.get(e, 0) + c
        return self._canon(terms)

    def _neg(self, a):
        return tuple((e, -c) for e, c in a)

    def _mul(self, a, b):
        terms: dict = {}
        for ea, ca in a:
            for eb, cb in b:
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return self._canon(terms)

    def _is_zero(self, a):
        return a == ()

    def _render(self, a):
        if not a:
            return "0"
        parts = []
        for e, c in a:
            factors = []
            for name, k in zip(self.variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


@dataclass(frozen=True)
class NilPlaneRing(Ring):
    """Z[x,y] with the relations x^2 = y^2 = xy = 0.

    Payload: (c0, c1, c2) standing for c0 + c1*x + c2*y.
    """

    def from_int(self, n: int) -> "RingValue":
        return RingValue(self, (int(n), 0, 0))

    def x(self) -> "RingValue":
        return RingValue(self, (0, 1, 0))

    def y(self) -> "RingValue":
        return RingValue(self, (0, 0, 1))

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])

    def _neg(self, a):
        return (-a[0], -a[1], -a[2])

    def _mul(self, a, b):
        # degree-2 and higher terms vanish
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[2] * b[0])

    def _is_zero(self, a):
        return a == (0, 0, 0)

    def _render(self, a):
        poly = PolynomialRing(("x", "y"))
        terms = {(0, 0): a[0], (1, 0): a[1], (0, 1): a[2]}
        return poly._render(poly._canon(terms))


@dataclass(frozen=True)
class RingValue:
    """An immutable element of one concrete ring."""

    ring: Ring
    payload: Any

    def _check(self, other: "RingValue") -> None:
        if not isinstance(other, RingValue):
            raise TypeError(f"expected RingValue, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "RingValue") -> "RingValue":
        self._check(other)
        return RingValue(self.ring, self.ring._add(self.payload, other.payload))

    def __sub__(self, other: "RingValue") -> "RingValue":
        self._check(other)
        return RingValue(self.ring, self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __neg__(self) -> "RingValue":
        return RingValue(self.ring, self.ring._neg(self.payload))

    def __mul__(self, other: "RingValue") -> "RingValue":
        self._check(other)
        return RingValue(self.ring, self.ring._mul(self.payload, other.payload))

    def __pow__(self, n: int) -> "RingValue":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.payload)

    def term_count(self) -> int:
        if isinstance(self.ring, PolynomialRing):
            return len(self.payload)
        return 0 if self.is_zero() else 1

    def render(self) -> str:
        return self.ring._render(self.payload)

    def __str__(self) -> str:
        return self.render()


ZZ = IntegerRing()


def poly_substitute(p: RingValue, assignment: Mapping[str, RingValue]) -> RingValue:
    """Evaluate a polynomial by substituting values from a single target ring.

    The substitution is a ring homomorphism; every variable of p must be
    assigned, and all assigned values must share one ring.
    """
    if not isinstance(p.ring, PolynomialRing):
        raise TypeError("poly_substitute expects a polynomial value")
    names = p.ring.variables
    missing = [v for v in names if v not in assignment]
    if missing:
        raise KeyError(f"missing assignment for variable(s): {', '.join(missing)}")
    values = [assignment[v] for v in names]
    target = values[0].ring if values else ZZ
    for v in values:
        if v.ring != target:
            raise RingMismatchError("assigned values must share one ring")
    out = target.zero()
    for exps, coeff in p.payload:
        term = target.from_int(coeff)
        for val, k in zip(values, exps):
            term = term * val**k
        out = out + term
    return out


_TOKEN = re.compile(r"\s*(?:(\d[\d_]*)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at: {text[pos:]!r}")
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the shared element grammar.

    expression := term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := '-' factor | atom ('^' int)?
    atom       := int | name | '(' expression ')'
    """

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> RingValue:
        value = self.expression()
        if self.pos != len(self.tokens):
            raise ParseError("trailing input after expression")
        return value

    def expression(self) -> RingValue:
        value = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RingValue:
        value = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> RingValue:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        value = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            value = value**n
        return value

    def atom(self) -> RingValue:
        kind, val = self.take()
        if kind == "int":
            return self.ring.from_int(val)
        if kind == "name":
            if isinstance(self.ring, PolynomialRing) and val in self.ring.variables:
                return self.ring.gen(val)
            if isinstance(self.ring, NilPlaneRing) and val in ("x", "y"):
                return self.ring.x() if val == "x" else self.ring.y()
            raise ParseError(f"unknown symbol {val!r} for ring {self.ring}")
        if (kind, val) == ("op", "("):
            value = self.expression()
            if self.take() != ("op", ")"):
                raise ParseError("expected closing parenthesis")
            return value
        raise ParseError("unexpected end of input")


def parse_value(ring: Ring, text: str) -> RingValue:
    """Parse an element of the given ring from its canonical text grammar."""
    return _Parser(ring, text).parse()
