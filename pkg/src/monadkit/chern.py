"""Truncated total-Chern-series arithmetic and the low-rank parity test.

A bundle with c twisted sub- and quotient-summands of opposite weights has
total Chern series 1 / ((1-lt)^c (1+lt)^c) = (1 - l^2 t^2)^(-c), where l
is the hyperplane class.  Only the integer coefficient of each l^i t^i is
tracked; the even coefficients are binomials and strictly positive, which
is exactly what rules out even-dimensional low-rank cohomology bundles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import StructureError


@dataclass(frozen=True)
class ChernSeries:
    """Coefficients alpha_0..alpha_n of sum alpha_i l^i t^i, truncated."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise StructureError("a Chern series starts with constant term 1")

    def truncation_order(self) -> int:
        return len(self.coeffs) - 1


def series_mul(a, b, n: int):
    """Truncated product of plain coefficient lists, up to degree n."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_inverse(a, n: int):
    """Truncated multiplicative inverse; needs a[0] == 1."""
    if a[0] != 1:
        raise StructureError("can only invert a series with constant term 1")
    inv = [0] * (n + 1)
    inv[0] = 1
    for k in range(1, n + 1):
        acc = 0
        for j in range(1, k + 1):
            if j < len(a) and a[j]:
                acc += a[j] * inv[k - j]
        inv[k] = -acc
    return inv


def twist_pair_series(c: int, n: int):
    """Coefficients of (1 - l^2 t^2)^c up to t^n."""
    out = [0] * (n + 1)
    for j in range(0, n // 2 + 1):
        out[2 * j] = (-1) ** j * math.comb(c, j)
    return out


def chern_series(c: int, n: int) -> ChernSeries:
    """Coefficients of (1 - l^2 t^2)^(-c) up to t^n, by series inversion.

    The even entries come out as the binomials C(c+k-1, k); the odd ones
    vanish.
    """
    if c < 0 or n < 0:
        raise StructureError("need c >= 0 and n >= 0")
    direct = twist_pair_series(c, n)
    return ChernSeries(tuple(series_inverse(direct, n)))


@dataclass(frozen=True)
class LowRankShape:
    admissible: bool
    reason: str

    def as_dict(self):
        return {"admissible": self.admissible, "reason": self.reason}


def low_rank_shape(a: int, b: int, c: int, n: int) -> LowRankShape:
    """Whether (a, b, c) on an n-fold is the one shape that can carry a
    bundle of rank below n: equal outer ranks, b = 2c + n - 1, and n odd.

    For even n the obstruction is the top series coefficient: the rank
    would be n - 1, forcing the top Chern class alpha_n l^n to vanish, yet
    alpha_n > 0 whenever c >= 1.
    """
    failed = []
    if a != c:
        failed.append(f"a != c ({a} != {c})")
    if b != 2 * c + n - 1:
        failed.append(f"b != 2c+n-1 ({b} != {2 * c + n - 1})")
    if n % 2 == 0:
        if c >= 1:
            alpha = chern_series(c, n).coeffs[n]
            failed.append(
                f"n even: top coefficient alpha_{n} = {alpha} is positive, "
                f"so the top Chern class alpha_{n}*l^{n} cannot vanish"
            )
        else:
            failed.append("n even")
    if failed:
        return LowRankShape(False, "; ".join(failed))
    return LowRankShape(True, f"shape ({c}, 2c+n-1, {c}) with n = {n} odd")
