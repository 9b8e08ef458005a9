"""Lucas-type sequences, polygonal numbers and alternating prime sums.

The Lucas pair u_n(A, B), v_n(A, B) satisfies x_{n+1} = A*x_n - B*x_{n-1}
with seeds u_0 = 0, u_1 = 1 and v_0 = 2, v_1 = A.  Fibonacci/Lucas use
(A, B) = (1, -1), Pell and its companion (2, -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .arith import PrimePowerModulus
from .sieve import CoverageError, SieveTable

__all__ = [
    "AltSumTable",
    "FIBONACCI",
    "LucasParams",
    "PELL",
    "Stepper",
    "alt_sum_table",
    "lucas_pair",
    "polygonal",
    "root_monotone_check",
    "stepper",
]

EXACT_INDEX_CAP = 10_000


class LucasParams(NamedTuple):
    A: int
    B: int


FIBONACCI = LucasParams(1, -1)
PELL = LucasParams(2, -1)


def _pair_by_doubling(params: LucasParams, n: int, mod: int | None) -> tuple[int, int]:
    """(u_n, u_{n+1}) by binary doubling; exact when mod is None."""
    A, B = params
    a, b = 0, 1  # (u_0, u_1)
    for bit in bin(n)[2:]:
        # (u_k, u_{k+1}) -> (u_{2k}, u_{2k+1}); v_k = 2u_{k+1} - A*u_k
        even = a * (2 * b - A * a)
        odd = b * b - B * a * a
        if bit == "1":
            a, b = odd, A * odd - B * even
        else:
            a, b = even, odd
        if mod is not None:
            a %= mod
            b %= mod
    return a, b


def lucas_pair(
    params: LucasParams, n: int, modulus: int | PrimePowerModulus | None = None
) -> tuple[int, int]:
    """(u_n, v_n), reduced mod modulus when given; exact mode capped at n <= 10^4."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    mod = modulus.modulus if isinstance(modulus, PrimePowerModulus) else modulus
    if mod is None and n > EXACT_INDEX_CAP:
        raise ValueError(f"exact evaluation capped at index {EXACT_INDEX_CAP}")
    if mod is not None and mod < 1:
        raise ValueError("modulus must be positive")
    a, b = _pair_by_doubling(params, n, mod)
    v = 2 * b - params.A * a
    if mod is not None:
        v %= mod
    return a, v


@dataclass(frozen=True)
class Stepper:
    """Linear map advancing (u_n, u_{n+1}) to (u_{n+stride}, u_{n+stride+1}) mod m."""

    matrix: tuple[int, int, int, int]  # row-major 2x2
    modulus: int

    def apply(self, pair: tuple[int, int]) -> tuple[int, int]:
        a, b = pair
        m00, m01, m10, m11 = self.matrix
        mod = self.modulus
        return (m00 * a + m01 * b) % mod, (m10 * a + m11 * b) % mod


def stepper(
    params: LucasParams, stride: int, modulus: int | PrimePowerModulus
) -> Stepper:
    """Companion-matrix power advancing the u-pair by stride indices per call."""
    if stride < 1:
        raise ValueError("stride must be positive")
    mod = modulus.modulus if isinstance(modulus, PrimePowerModulus) else modulus
    A, B = params
    result = (1, 0, 0, 1)
    base = (0, 1, -B % mod, A % mod)

    def mul(x, y):
        x00, x01, x10, x11 = x
        y00, y01, y10, y11 = y
        return (
            (x00 * y00 + x01 * y10) % mod,
            (x00 * y01 + x01 * y11) % mod,
            (x10 * y00 + x11 * y10) % mod,
            (x10 * y01 + x11 * y11) % mod,
        )

    e = stride
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return Stepper(result, mod)


def polygonal(m: int, k: int) -> int:
    """The k-th m-gonal number (m-2)*k*(k-1)/2 + k; squares at m = 4."""
    if m < 3:
        raise ValueError("polygonal order must be at least 3")
    return (m - 2) * k * (k - 1) // 2 + k


class AltSumTable:
    """Alternating prime sums s_n = p_n - p_{n-1} + ... + (-1)^(n-1) * p_1.

    Satisfies s_1 = 2 and s_n = p_n - s_{n-1}; every tabulated value is
    checked to be >= 1 at construction.
    """

    def __init__(self, primes: list[int]):
        s = [0] * (len(primes) + 1)
        prev = 0
        for i, p in enumerate(primes, start=1):
            prev = p - prev
            if prev < 1:
                raise ValueError(f"alternating sum dropped below 1 at index {i}")
            s[i] = prev
        self._s = s
        self.count = len(primes)
        self._primes = primes

    def s(self, n: int) -> int:
        if not 1 <= n <= self.count:
            raise IndexError(f"alternating sum index {n} outside 1..{self.count}")
        return self._s[n]

    def values(self) -> list[int]:
        """All tabulated sums s_1..s_count."""
        return self._s[1:]

    def prime(self, n: int) -> int:
        return self._primes[n - 1]

    def partial_alt_sum(self, k: int, n: int) -> int:
        """p_n - p_{n-1} + ... + (-1)^(n-k) * p_k, for 1 <= k <= n."""
        if not 1 <= k <= n <= self.count:
            raise IndexError(f"partial sum range {k}..{n} outside table")
        sign = -1 if (n - k) % 2 else 1
        return self._s[n] + sign * self._s[k - 1]


def alt_sum_table(t: SieveTable, count: int) -> AltSumTable:
    if count < 1:
        raise ValueError("need at least one entry")
    if count > len(t.primes):
        raise CoverageError(f"only {len(t.primes)} primes tabulated, need {count}")
    return AltSumTable(t.primes[:count])


def root_monotone_check(
    values: list[int], start_index: int = 1, direction: str = "decreasing"
) -> int | None:
    """First index i >= start_index where strict monotonicity of values[i]^(1/i) fails.

    values[0] carries index 1.  Comparisons are exact integer cross-powers
    (a_i^(i+1) versus a_{i+1}^i), never floating point.
    """
    if direction not in ("decreasing", "increasing"):
        raise ValueError("direction must be 'decreasing' or 'increasing'")
    if start_index < 1:
        raise ValueError("start_index must be >= 1")
    for i in range(start_index, len(values)):
        a, b = values[i - 1], values[i]
        if a < 1 or b < 1:
            raise ValueError("values must be positive")
        lhs = a ** (i + 1)
        rhs = b**i
        ok = lhs > rhs if direction == "decreasing" else lhs < rhs
        if not ok:
            return i
    return None
