"""Exact coefficient fields: GF(p) for a prime p, and the rationals.

Elements are plain Python values (ints in ``[0, p)`` for GF(p),
``fractions.Fraction`` for the rationals), so the hot polynomial loops work
on unboxed data.  A field object only carries the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StructureError

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid far beyond any modulus we accept
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class GF:
    """Prime field GF(p).  Elements are ints in ``[0, p)``."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise StructureError(f"field characteristic {p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            den = v.denominator % self.p
            if den == 0:
                raise StructureError(f"denominator of {v} vanishes mod {self.p}")
            return v.numerator * pow(den, -1, self.p) % self.p
        raise StructureError(f"cannot coerce {v!r} into GF({self.p})")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def balanced(self, a) -> int:
        """Representative in ``(-p/2, p/2]``, for readable printing."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def sqrt(self, a):
        """A square root of ``a`` if one exists, else ``None``."""
        a %= self.p
        if a == 0:
            return 0
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            return None
        if self.p % 4 == 3:
            r = pow(a, (self.p + 1) // 4, self.p)
            return r if r * r % self.p == a else None
        # Tonelli-Shanks for p = 1 (mod 4)
        q, s = self.p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (self.p - 1) // 2, self.p) != self.p - 1:
            z += 1
        m, c = s, pow(z, q, self.p)
        t, r = pow(a, q, self.p), pow(a, (q + 1) // 2, self.p)
        while t != 1:
            t2, i = t * t % self.p, 1
            while t2 != 1:
                t2 = t2 * t2 % self.p
                i += 1
            b = pow(c, 1 << (m - i - 1), self.p)
            m, c = i, b * b % self.p
            t, r = t * c % self.p, r * b % self.p
        return r

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class QQ:
    """The rational numbers.  Elements are ``fractions.Fraction`` values,
    which are automatically in lowest terms with positive denominator."""

    __slots__ = ()

    @property
    def char(self) -> int:
        return 0

    def coerce(self, v):
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        raise StructureError(f"cannot coerce {v!r} into QQ")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def pow(self, a, e: int):
        return Fraction(a) ** e

    def balanced(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def field_from_char(char: int):
    """Field for a JSON ``{"char": p|0}`` descriptor."""
    return QQ() if char == 0 else GF(char)
