"""Shared search machinery: threshold scans, sumset covers, Collatz-type maps,
alternating-sum representations and residue coverage."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from ..arith import jacobi
from ..sieve import CoverageError
from .context import RunContext

__all__ = [
    "ScanResult",
    "alt_sum_rep",
    "collatz_step_f",
    "collatz_step_g",
    "e_check",
    "estar_check",
    "f_check",
    "gonal_check",
    "least_alt_f",
    "residue_coverage",
    "s_check",
    "sumset_cover",
    "threshold_scan",
    "trajectory",
]


# -- family predicates behind the published threshold tables -----------------


def e_check(ctx: RunContext, n: int, a: int):
    """n = p + (1+(n mod 2))q, p and q prime, (2^a+2)(p+q)^2 + pq prime."""
    w = 1 + (n & 1)
    c = (1 << a) + 2
    pf, isp = ctx.pf, ctx.isp
    for q in ctx.primes:
        p = n - w * q
        if p < 2:
            break
        if pf[p]:
            s = p + q
            if isp(c * s * s + p * q):
                return (p, q)
    return None


def estar_check(ctx: RunContext, n: int, a: int):
    """Odd n = p + 2q, p and q prime, p^2 + 4(2^a - 1)q^2 prime."""
    c = 4 * ((1 << a) - 1)
    pf, isp = ctx.pf, ctx.isp
    for q in ctx.primes:
        p = n - 2 * q
        if p < 2:
            break
        if pf[p] and isp(p * p + c * q * q):
            return (p, q)
    return None


def s_check(ctx: RunContext, n: int, m: int):
    """n = p + (1+(n mod 2))q with primes p > q > 2 and both Jacobi symbols
    (p - (1+(n mod 2))m / q) and (q + m / p) equal to 1."""
    w = 1 + (n & 1)
    wm = w * m
    pf = ctx.pf
    for q in ctx.primes[1:]:
        p = n - w * q
        if p <= q:
            break
        if pf[p] and jacobi(p - wm, q) == 1 and jacobi(q + m, p) == 1:
            return (p, q)
    return None


def f_check(ctx: RunContext, n: int, m: int):
    """Odd n = x + y (x, y >= 0) with x^m + 3*y^m prime."""
    isp = ctx.isp
    for x in range(n + 1):
        y = n - x
        if isp(x**m + 3 * y**m):
            return (x, y)
    return None


def gonal_check(ctx: RunContext, n: int, m: int):
    """n + P prime for an m-gonal P = (m-2)k(k-1)/2 + k with 0 <= k < n."""
    isp = ctx.isp
    step = m - 2
    for k in range(n):
        if isp(n + step * k * (k - 1) // 2 + k):
            return k
    return None


@dataclass
class ScanResult:
    family: str
    param: int
    bound: int
    failures: Optional[list[int]] = None  # E / Estar families
    max_failing: Optional[int] = None  # s / f / gonal families
    candidate: Optional[int] = None  # threshold candidate, verified to `bound` only


def threshold_scan(family: str, param: int, bound: int, ctx: RunContext) -> ScanResult:
    """Scan n <= bound for one parametric family and report its failure profile.

    E/Estar return the failing set; s, f and gonal return the largest failure
    plus the induced threshold candidate (next domain point), which is only
    "verified to bound", never proven.
    """
    checks: dict[str, tuple[Callable, int, int]] = {
        # family -> (predicate, first n, step)
        "E": (e_check, 1, 1),
        "Estar": (estar_check, 1, 2),
        "s": (s_check, 1, 1),
        "f": (f_check, 1, 2),
        "gonal": (gonal_check, 1, 1),
    }
    if family not in checks:
        raise ValueError(f"unknown scan family {family!r}")
    fn, start, step = checks[family]
    failures = [n for n in range(start, bound + 1, step) if not fn(ctx, n, param)]
    if family in ("E", "Estar"):
        return ScanResult(family, param, bound, failures=failures)
    if failures:
        top = failures[-1]
        return ScanResult(family, param, bound, max_failing=top, candidate=top + step)
    return ScanResult(family, param, bound, max_failing=None, candidate=start)


# -- sumsets -------------------------------------------------------------------


def sumset_cover(ctx: RunContext, x_kind: str, y_kind: str, lo: int, hi: int) -> list[int]:
    """Integers in [lo, hi] not of the form x + y with x, y from the named pools.

    Pools: 'A' (6x-1, 6x+1 twin primes), 'B' (6x+1, 6x+5 prime),
    'C' (2x-3, 2x+3 prime).
    """
    pools = {"A": ctx.pool_a, "B": ctx.pool_b, "C": ctx.pool_c}
    xs, ys = pools[x_kind], pools[y_kind]
    if 6 * hi + 5 > ctx.bound:
        raise CoverageError(f"sumset elements to {hi} need sieve bound {6 * hi + 5}")
    mask = 0
    for y in ys:
        if y > hi:
            break
        mask |= 1 << y
    cap = (1 << (hi + 1)) - 1
    cover = 0
    for x in xs:
        if x > hi:
            break
        cover |= mask << x
    cover &= cap
    return [n for n in range(lo, hi + 1) if not (cover >> n) & 1]


# -- Collatz-type maps ------------------------------------------------------------


def collatz_step_f(ctx: RunContext, n: int) -> int:
    """(p+1)/2 if 4 | p+1 else p, with p the least prime > n making 2(n+1)-p prime."""
    target = 2 * (n + 1)
    for p in ctx.primes_above(n):
        if p >= target:
            raise CoverageError(f"no prime witness below {target} for start {n}")
        if ctx.pf[target - p]:
            return (p + 1) // 2 if (p + 1) % 4 == 0 else p
    raise CoverageError("prime iteration exhausted")


def collatz_step_g(ctx: RunContext, n: int) -> int:
    """q/2 if 4 | q else q, with q the least practical > n making 2(n+1)-q practical."""
    target = 2 * (n + 1)
    qf = ctx.qf
    q = n + 1
    while q < target:
        if q > ctx.bound:
            raise CoverageError(f"practical search beyond sieve bound {ctx.bound}")
        if qf[q] and qf[target - q]:
            return q // 2 if q % 4 == 0 else q
        q += 1
    raise CoverageError(f"no practical witness below {target} for start {n}")


class CapExceeded(Exception):
    """Trajectory did not reach 4 within the step cap."""


def trajectory(start: int, step: Callable[[int], int], cap: int = 1000) -> list[int]:
    """Visited values from start until first reaching 4 (inclusive)."""
    values = [start]
    current = start
    while current != 4:
        if len(values) >= cap:
            raise CapExceeded(f"no 4 within {cap} steps from {start}")
        current = step(current)
        values.append(current)
    return values


# -- alternating prime sums ---------------------------------------------------------


def alt_sum_rep(ctx: RunContext, m: int, n: int):
    """Least k < n with p_n - p_{n-1} + ... + (-1)^(n-k) p_k = m, or None.

    Uses s_j bookkeeping: the partial sum from k equals s_n + (-1)^(n-k) s_{k-1},
    so admissible k come from the indices where s takes the value |m - s_n|.
    """
    return next(_alt_candidates(ctx, m, n), None)


def _alt_candidates(ctx: RunContext, m: int, n: int):
    """All k < n with partial alternating sum from k to n equal to m."""
    s = ctx.alt
    d = m - s.s(n)
    if d == 0 and n > 1:
        yield 1
    for j in ctx.alt_index_by_value.get(abs(d), []):
        if j + 1 >= n:
            break
        sign = -1 if (n - (j + 1)) % 2 else 1
        if sign * s.s(j) == d:
            yield j + 1


def alt_rep_with_practical(ctx: RunContext, m: int, n: int):
    """A k < n with the partial-sum representation and p_k - 1 practical."""
    for k in _alt_candidates(ctx, m, n):
        if ctx.ispr(ctx.alt.prime(k) - 1):
            return k
    return None


def least_alt_f(ctx: RunContext, m: int, search_cap: Optional[int] = None):
    """Least prime p_n with p_n + 1 practical admitting the representation of m
    from some k < n with p_k - 1 practical; returns (p_n, n, k)."""
    top = search_cap or ctx.alt.count
    qf_ok = ctx.ispr
    for n in range(2, top + 1):
        if not qf_ok(ctx.alt.prime(n) + 1):
            continue
        k = alt_rep_with_practical(ctx, m, n)
        if k is not None:
            return ctx.alt.prime(n), n, k
    return None


def residue_coverage(ctx: RunContext, m: int, r: int, count_bound: int):
    """(occurrences, first few indices) of s_n = r (mod m) for n <= count_bound."""
    if count_bound > ctx.alt.count:
        raise CoverageError(f"alternating-sum table holds {ctx.alt.count} entries")
    target = r % m
    count = 0
    first: list[int] = []
    for j, v in enumerate(ctx.alt_values[:count_bound], start=1):
        if v % m == target:
            count += 1
            if len(first) < 10:
                first.append(j)
    return count, first
