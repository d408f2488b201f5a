"""Exact scalar arithmetic over Q and over prime fields F_p (p an odd prime).

Scalars are plain values: ``fractions.Fraction`` over Q, Python ``int``
residues in ``range(p)`` over F_p.  A :class:`Field` bundles the operations
so generic code never branches on the field kind.  No floating point is used
anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

# Witness bases making Miller-Rabin deterministic for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class BadCoefficient(ValueError):
    """A coefficient string does not parse in the given field."""


class Field:
    """Q when ``p`` is None, otherwise F_p with p an odd prime (p >= 3).

    Characteristic 2 is rejected outright: the Jordan product needs 1/2.
    p = 3 is accepted but some symbolic shortcuts degrade (see validate_jordan).
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if p < 3 or p % 2 == 0 or not is_prime(p):
                raise ValueError(f"field order must be an odd prime >= 3, got {p}")
        self.p = p

    # -- identity ---------------------------------------------------------

    @property
    def kind(self) -> str:
        return "Q" if self.p is None else "Fp"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    # -- element construction ----------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def coerce(self, v) -> Scalar:
        """Canonicalize an int / Fraction / coefficient string into the field."""
        if isinstance(v, str):
            return self.parse(v)
        if self.p is None:
            if isinstance(v, Fraction):
                return v
            if isinstance(v, int):
                return Fraction(v)
            raise BadCoefficient(f"cannot coerce {v!r} into Q")
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise BadCoefficient(f"denominator of {v} vanishes mod {self.p}")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        if isinstance(v, int):
            return v % self.p
        raise BadCoefficient(f"cannot coerce {v!r} into F_{self.p}")

    def parse(self, s: str) -> Scalar:
        """Parse a coefficient string: "n/d" over Q, a decimal residue over F_p."""
        s = s.strip()
        try:
            if self.p is None:
                if "/" in s:
                    num, den = s.split("/", 1)
                    return Fraction(int(num), int(den))
                return Fraction(int(s))
            if "/" in s:
                num, den = s.split("/", 1)
                d = int(den) % self.p
                if d == 0:
                    raise BadCoefficient(f"denominator {den} vanishes mod {self.p}")
                return int(num) * pow(d, -1, self.p) % self.p
            return int(s) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise BadCoefficient(f"bad coefficient {s!r} for {self!r}: {exc}") from None

    def fmt(self, x: Scalar) -> str:
        """Canonical coefficient string; inverse of parse on canonical scalars."""
        if self.p is None:
            return f"{x.numerator}/{x.denominator}"
        return str(x % self.p)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return not a if self.p is None else a % self.p == 0

    # -- square roots (used by the symbolic quadratic solver) ---------------

    def sqrt(self, a: Scalar) -> Scalar | None:
        """An exact square root of ``a`` in the field, or None if there is none."""
        if self.p is None:
            if a < 0:
                return None
            rn = math.isqrt(a.numerator)
            rd = math.isqrt(a.denominator)
            if rn * rn == a.numerator and rd * rd == a.denominator:
                return Fraction(rn, rd)
            return None
        a %= self.p
        if a == 0:
            return 0
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            return None
        return _tonelli_shanks(a, self.p)

    # -- misc ---------------------------------------------------------------

    def sort_key(self, x: Scalar):
        """Total order used for canonical witness selection."""
        return x if self.p is not None else (x.numerator, x.denominator)


def _tonelli_shanks(a: int, p: int) -> int:
    """Square root of a quadratic residue a mod odd prime p."""
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


RATIONALS = Field(None)
