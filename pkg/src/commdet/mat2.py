"""2x2 matrices over a commutative ring: products, determinant, traces, adjoint.

The type is deliberately fixed at 2x2: the determinantal formulas
implemented elsewhere in this package fail for larger blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import ParseError, Ring, RingMismatchError, RingValue, parse_value

__all__ = [
    "Mat2",
    "QTraceContext",
    "commutator",
    "cayley_hamilton_residual",
    "parse_mat2",
]


@dataclass(frozen=True)
class QTraceContext:
    """A fixed deformation parameter q together with the quantum two 1+q."""

    q: RingValue
    two: RingValue

    @classmethod
    def from_q(cls, q: RingValue) -> "QTraceContext":
        return cls(q=q, two=q.ring.one() + q)


@dataclass(frozen=True)
class Mat2:
    m11: RingValue
    m12: RingValue
    m21: RingValue
    m22: RingValue

    def __post_init__(self):
        ring = self.m11.ring
        for e in (self.m12, self.m21, self.m22):
            if e.ring != ring:
                raise RingMismatchError("matrix entries must share one ring")

    @property
    def ring(self) -> Ring:
        return self.m11.ring

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_ints(cls, ring: Ring, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(ring.from_int(a), ring.from_int(b), ring.from_int(c), ring.from_int(d))

    @classmethod
    def identity(cls, ring: Ring) -> "Mat2":
        return cls(ring.one(), ring.zero(), ring.zero(), ring.one())

    @classmethod
    def zero(cls, ring: Ring) -> "Mat2":
        z = ring.zero()
        return cls(z, z, z, z)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.m11 + other.m11, self.m12 + other.m12,
                    self.m21 + other.m21, self.m22 + other.m22)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.m11 - other.m11, self.m12 - other.m12,
                    self.m21 - other.m21, self.m22 - other.m22)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def scale(self, c: RingValue) -> "Mat2":
        return Mat2(c * self.m11, c * self.m12, c * self.m21, c * self.m22)

    def det(self) -> RingValue:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> RingValue:
        return self.m11 + self.m22

    def qtrace(self, ctx: QTraceContext) -> RingValue:
        return self.m11 + ctx.q * self.m22

    def supertrace(self) -> RingValue:
        return self.m11 - self.m22

    def adjoint(self) -> "Mat2":
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in (self.m11, self.m12, self.m21, self.m22))

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def render(self) -> str:
        return (f"[[{self.m11.render()},{self.m12.render()}],"
                f"[{self.m21.render()},{self.m22.render()}]]")

    def __str__(self) -> str:
        return self.render()


def commutator(x: Mat2, y: Mat2) -> Mat2:
    """XY - YX; the result always has trace zero."""
    return x * y - y * x


def cayley_hamilton_residual(m: Mat2) -> Mat2:
    """M^2 - tr(M) M + det(M) I; identically the zero matrix."""
    return m * m - m.scale(m.trace()) + Mat2.identity(m.ring).scale(m.det())


def parse_mat2(ring: Ring, text: str) -> Mat2:
    """Parse "[[m11,m12],[m21,m22]]" with ring-element entries."""
    s = text.strip()
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ParseError(f"matrix must look like [[a,b],[c,d]], got {text!r}")
    body = s[2:-2]
    rows = body.split("],[")
    if len(rows) != 2:
        raise ParseError("matrix must have exactly two rows")
    entries = []
    for row in rows:
        cols = row.split(",")
        if len(cols) != 2:
            raise ParseError("each matrix row must have exactly two entries")
        entries.append([parse_value(ring, col) for col in cols])
    return Mat2.from_rows(entries)
