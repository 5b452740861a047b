"""Independent oracles used by the test suite.

These deliberately avoid the library's own arithmetic paths.
"""

from __future__ import annotations


def schoolbook_multiply(a: int, b: int) -> int:
    """Digit-array long multiplication in base 10."""
    sign = 1
    if a < 0:
        sign, a = -sign, -a
    if b < 0:
        sign, b = -sign, -b
    da = [int(ch) for ch in str(a)][::-1]
    db = [int(ch) for ch in str(b)][::-1]
    out = [0] * (len(da) + len(db))
    for i, x in enumerate(da):
        carry = 0
        for j, y in enumerate(db):
            total = out[i + j] + x * y + carry
            out[i + j] = total % 10
            carry = total // 10
        out[i + len(db)] += carry
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return sign * int("".join(str(d) for d in out[::-1]))


def mat_mul(x, y, n=0):
    """2x2 integer matrix product on ((a,b),(c,d)) tuples, optionally mod n."""
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    out = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
    if n:
        out = tuple(tuple(v % n for v in row) for row in out)
    return out


def mat_sub(x, y):
    return tuple(tuple(u - v for u, v in zip(r1, r2)) for r1, r2 in zip(x, y))


def det(m):
    (a, b), (c, d) = m
    return a * d - b * c


def tr(m):
    return m[0][0] + m[1][1]


def strace(m):
    return m[0][0] - m[1][1]


def commutator_det(x, y) -> int:
    return det(mat_sub(mat_mul(x, y), mat_mul(y, x)))
