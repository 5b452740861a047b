"""Binary quadratic forms: evaluation, finite value sets, witness search.

Representation search over Z is a bounded box scan.  For positive
definite forms the scanner also derives the analytic coordinate bounds,
so an exhausted scan within those bounds is a genuine nonexistence
proof; for all other forms exhaustion only means "no witness within the
bound".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from .rings import IntegerRing, ModularRing, RingMismatchError, RingValue, ZZ

__all__ = [
    "QuadForm",
    "Representation",
    "SearchResult",
    "discriminant",
    "value_set_mod",
    "representable_mod",
    "search_representation",
    "inclusion_chain_check_mod",
    "MAX_ENUM_MODULUS",
]

MAX_ENUM_MODULUS = 16


@dataclass(frozen=True)
class QuadForm:
    """Coefficients (s, t, delta) of s*x^2 + t*x*y + delta*y^2."""

    s: RingValue
    t: RingValue
    delta: RingValue

    def __post_init__(self):
        if self.t.ring != self.s.ring or self.delta.ring != self.s.ring:
            raise RingMismatchError("form coefficients must share one ring")

    @property
    def ring(self):
        return self.s.ring

    @classmethod
    def from_ints(cls, ring, s: int, t: int, delta: int) -> "QuadForm":
        return cls(ring.from_int(s), ring.from_int(t), ring.from_int(delta))

    @classmethod
    def diagonal(cls, ring, p: int, q: int) -> "QuadForm":
        return cls.from_ints(ring, p, 0, q)

    def eval(self, r1: RingValue, r2: RingValue) -> RingValue:
        if r1.ring != self.ring or r2.ring != self.ring:
            raise RingMismatchError("arguments must share the form's ring")
        return self.s * r1 ** 2 + self.t * r1 * r2 + self.delta * r2 ** 2


@dataclass(frozen=True)
class Representation:
    r1: RingValue
    r2: RingValue
    value: RingValue


@dataclass(frozen=True)
class SearchResult:
    found: Optional[Representation]
    proved_absent: bool
    bound: int


def discriminant(t: RingValue, delta: RingValue) -> RingValue:
    """t^2 - 4*delta."""
    four = t.ring.from_int(4)
    return t ** 2 - four * delta


def _check_modulus(n: int) -> None:
    if n > MAX_ENUM_MODULUS:
        raise ValueError(f"modulus {n} exceeds enumeration cap {MAX_ENUM_MODULUS}")


def value_set_mod(form: QuadForm) -> Set[int]:
    """Exact image of (Z/n)^2 under the form, by full enumeration."""
    ring = form.ring
    if not isinstance(ring, ModularRing):
        raise TypeError("value_set_mod expects a form over a modular ring")
    n = ring.modulus
    _check_modulus(n)
    out = set()
    for r1 in range(n):
        for r2 in range(n):
            out.add(form.eval(ring.from_int(r1), ring.from_int(r2)).payload)
    return out


def representable_mod(p: int, q: int, c: int, n: int) -> bool:
    """Whether c mod n lies in the value set of p*x^2 + q*y^2 over Z/n."""
    _check_modulus(n)
    ring = ModularRing(n)
    return c % n in value_set_mod(QuadForm.diagonal(ring, p, q))


def _shell(total: int, bound: int):
    lo = max(0, total - bound)
    hi = min(total, bound)
    for a1 in range(lo, hi + 1):
        a2 = total - a1
        for r1 in ([a1, -a1] if a1 else [0]):
            for r2 in ([a2, -a2] if a2 else [0]):
                yield r1, r2


def search_representation(form: QuadForm, c: int, bound: int) -> SearchResult:
    """Scan |r1|, |r2| <= bound for f(r1, r2) = c over the integers.

    Scan order: ascending |r1|+|r2|, then ascending |r1|, then
    nonnegative values before negatives.  Deterministic, so the first
    hit is reproducible across runs.
    """
    if not isinstance(form.ring, IntegerRing):
        raise TypeError("integer search expects a form over the integers")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    s = form.s.payload
    t = form.t.payload
    d = form.delta.payload
    disc = t * t - 4 * s * d

    proved = False
    eff_bound = bound
    if s > 0 and disc < 0:
        # positive definite: f >= (-disc)/(4s) * y^2 and f >= (-disc)/(4d) * x^2
        if c < 0:
            return SearchResult(found=None, proved_absent=True, bound=0)
        b2 = math.isqrt(4 * s * c // (-disc)) + 1
        b1 = math.isqrt(4 * d * c // (-disc)) + 1
        analytic = max(b1, b2)
        if analytic <= bound:
            eff_bound = analytic
            proved = True

    for total in range(0, 2 * eff_bound + 1):
        for r1, r2 in _shell(total, eff_bound):
            if s * r1 * r1 + t * r1 * r2 + d * r2 * r2 == c:
                rep = Representation(ZZ.from_int(r1), ZZ.from_int(r2), ZZ.from_int(c))
                return SearchResult(found=rep, proved_absent=False, bound=eff_bound)
    return SearchResult(found=None, proved_absent=proved, bound=eff_bound)


def inclusion_chain_check_mod(t: int, delta: int, n: int) -> bool:
    """Check 4*V[1,t,delta] <= V[1,-Disc] <= V[1,t,delta] over Z/n."""
    _check_modulus(n)
    ring = ModularRing(n)
    f = QuadForm.from_ints(ring, 1, t, delta)
    disc = t * t - 4 * delta
    g = QuadForm.diagonal(ring, 1, -disc)
    vf = value_set_mod(f)
    vg = value_set_mod(g)
    four_vf = {(4 * v) % n for v in vf}
    return four_vf <= vg and vg <= vf
