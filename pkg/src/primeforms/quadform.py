"""Representation of primes by positive-definite binary quadratic forms.

Canonical representations take the least admissible y, then the least x,
so parity factors like (-1)^y are well-defined wherever the representation
is unique (asserted by callers via all_representations).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .sieve import CoverageError, SieveTable

__all__ = [
    "FormSpec",
    "RatioStats",
    "Representation",
    "all_representations",
    "quadform_prime_search",
    "ratio_stats",
    "represent",
]

X_GT_Y_GT_0 = "x>y>0"
X_POS_Y_POS = "x>0,y>0"
X_POS_Y_NONNEG = "x>0,y>=0"


@dataclass(frozen=True)
class FormSpec:
    """a*x^2 + b*x*y + c*y^2 with an admissibility constraint on (x, y).

    Positive-definite forms are supported everywhere; indefinite forms are
    allowed when b >= 0, where positivity on the admissible quadrant keeps
    the representation search finite (e.g. x^2 + 3xy + y^2).
    """

    a: int
    b: int
    c: int
    constraint: str = X_POS_Y_NONNEG

    def __post_init__(self) -> None:
        definite = self.b * self.b - 4 * self.a * self.c < 0
        if self.a <= 0 or self.c <= 0 or not (definite or self.b >= 0):
            raise ValueError("form must be positive on the admissible quadrant")
        if self.constraint not in (X_GT_Y_GT_0, X_POS_Y_POS, X_POS_Y_NONNEG):
            raise ValueError(f"unknown constraint {self.constraint!r}")

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def admissible(self, x: int, y: int) -> bool:
        if self.constraint == X_GT_Y_GT_0:
            return x > y > 0
        if self.constraint == X_POS_Y_POS:
            return x > 0 and y > 0
        return x > 0 and y >= 0

    def label(self) -> str:
        parts = []
        if self.a == 1:
            parts.append("x^2")
        else:
            parts.append(f"{self.a}x^2")
        if self.b:
            parts.append(f"{self.b}xy" if self.b != 1 else "xy")
        if self.c == 1:
            parts.append("y^2")
        else:
            parts.append(f"{self.c}y^2")
        return "+".join(parts)


@dataclass(frozen=True)
class Representation:
    x: int
    y: int
    form: FormSpec

    def __post_init__(self) -> None:
        if not self.form.admissible(self.x, self.y):
            raise ValueError("representation violates the form's constraint")


def _solutions_for_y(form: FormSpec, target: int, y: int) -> list[int]:
    """Positive integer roots x of a*x^2 + b*x*y + (c*y^2 - target) = 0."""
    disc = (form.b * form.b - 4 * form.a * form.c) * y * y + 4 * form.a * target
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    out = []
    for sign in (1, -1) if r else (1,):
        num = -form.b * y + sign * r
        if num > 0 and num % (2 * form.a) == 0:
            out.append(num // (2 * form.a))
    out.sort()
    return out


def _y_limit(form: FormSpec, target: int) -> int:
    disc = form.b * form.b - 4 * form.a * form.c
    if disc < 0:
        return isqrt(4 * form.a * target // -disc)
    # indefinite with b >= 0: on x > 0, y >= 0 the form dominates c*y^2
    return isqrt(target // form.c)


def represent(p: int, form: FormSpec) -> Representation | None:
    """Canonical representation of p by the form (least y, then least x), or None."""
    y0 = 0 if form.constraint == X_POS_Y_NONNEG else 1
    for y in range(y0, _y_limit(form, p) + 1):
        for x in _solutions_for_y(form, p, y):
            if form.admissible(x, y):
                return Representation(x, y, form)
    return None


def all_representations(p: int, form: FormSpec) -> list[Representation]:
    """Every admissible representation, ordered by (y, x)."""
    out = []
    y0 = 0 if form.constraint == X_POS_Y_NONNEG else 1
    for y in range(y0, _y_limit(form, p) + 1):
        for x in _solutions_for_y(form, p, y):
            if form.admissible(x, y):
                out.append(Representation(x, y, form))
    return out


@dataclass(frozen=True)
class RatioStats:
    numerator_sum: int
    denominator_sum: int
    count: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.numerator_sum, self.denominator_sum)

    @property
    def ratio_float(self) -> float:
        return self.numerator_sum / self.denominator_sum


def ratio_stats(
    t: SieveTable,
    N: int,
    form: FormSpec,
    residue_filter: tuple[int, frozenset[int] | set[int]],
    exponent: int = 1,
) -> RatioStats:
    """Sum x_p^e and y_p^e over representable primes p <= N in the residue classes."""
    if N > t.bound:
        raise CoverageError(f"ratio statistics to {N} exceed sieve bound {t.bound}")
    if exponent not in (1, 2, 3):
        raise ValueError("exponent must be 1, 2 or 3")
    mod, residues = residue_filter
    residues = frozenset(residues)
    num = den = count = 0
    for p in t.primes:
        if p > N:
            break
        if p % mod not in residues:
            continue
        rep = represent(p, form)
        if rep is None:
            continue
        num += rep.x**exponent
        den += rep.y**exponent
        count += 1
    return RatioStats(num, den, count)


def quadform_prime_search(
    t: SieveTable, p: int, d: int, mode: str = "mixed"
) -> int | None:
    """Least prime q < p making p^2 + d*p*q + q^2 (mixed) or p^2 + d*q^2 (pure) prime."""
    if mode not in ("mixed", "pure"):
        raise ValueError("mode must be 'mixed' or 'pure'")
    if p - 1 > t.bound:
        raise CoverageError(f"prime search below {p} exceeds sieve bound {t.bound}")
    pp = p * p
    for q in t.primes_in(2, p - 1):
        value = pp + d * p * q + q * q if mode == "mixed" else pp + d * q * q
        if t.is_prime(value):
            return q
    return None
