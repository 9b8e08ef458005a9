"""Shared read-only lookup context for conjecture checking.

Wraps a SieveTable plus derived member lists (twin-pair families, the sets S
and T, alternating prime sums, addend pools) built lazily and cached.  Point
primality/practicality queries transparently extend past the sieve bound;
member enumerations do not (CoverageError).
"""

from __future__ import annotations

import bisect
from functools import cached_property
from math import gcd, isqrt

from .. import arith
from ..sequences import AltSumTable, alt_sum_table
from ..sieve import CoverageError, SieveTable

__all__ = ["RunContext"]

# Product of odd primes below 160; a single gcd against it knocks out most
# composites before a full primality test is spent on a large value.
_PRESCREEN = 1
for _p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
           67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
           137, 139, 149, 151, 157):
    _PRESCREEN *= _p
_PRESCREEN_CAP = 157


class RunContext:
    def __init__(self, table: SieveTable):
        self.table = table
        self.bound = table.bound
        self.pf = table.prime_flags
        self.qf = table.practical_flags
        self.primes = table.primes

    # -- point predicates ---------------------------------------------------

    def isp(self, v) -> bool:
        """Primality for any integer, fast in-table, prescreened beyond."""
        if v <= self.bound:
            return v >= 2 and self.pf[v] == 1
        if v % 2 == 0:
            return False
        if v > 100_000_000:
            g = gcd(v % _PRESCREEN, _PRESCREEN)
            if g != 1:
                return v <= _PRESCREEN_CAP
        return arith.is_prime(v)

    def ispr(self, v) -> bool:
        """Practicality for any positive integer."""
        if 0 <= v <= self.bound:
            return self.qf[v] == 1
        return self.table.is_practical(v)

    def ispp(self, v) -> bool:
        """Prime or practical."""
        return self.isp(v) or self.ispr(v)

    def is_sg(self, p) -> bool:
        """Sophie Germain prime: p and 2p+1 prime."""
        return self.isp(p) and self.isp(2 * p + 1)

    def practical_product(self, *parts) -> bool:
        return self.table.is_practical_product(*parts)

    # -- prime slices ---------------------------------------------------------

    def primes_upto(self, x) -> list[int]:
        return self.primes[: bisect.bisect_right(self.primes, x)]

    def primes_in(self, lo, hi) -> list[int]:
        if hi > self.bound:
            raise CoverageError(f"prime slice to {hi} exceeds sieve bound {self.bound}")
        i = bisect.bisect_left(self.primes, lo)
        j = bisect.bisect_right(self.primes, hi)
        return self.primes[i:j]

    def primes_above(self, x):
        """Iterate primes > x, raising CoverageError past the table."""
        i = bisect.bisect_right(self.primes, x)
        yield from self.primes[i:]
        raise CoverageError(f"prime iteration beyond sieve bound {self.bound}")

    def pi(self, x) -> int:
        return bisect.bisect_right(self.primes, x)

    def nth_prime(self, i) -> int:
        return self.table.nth_prime(i)

    # -- derived member pools --------------------------------------------------

    @cached_property
    def practicals(self) -> list[int]:
        qf = self.qf
        return [n for n in range(1, self.bound + 1) if qf[n]]

    def practicals_upto(self, x) -> list[int]:
        pr = self.practicals
        return pr[: bisect.bisect_right(pr, x)]

    @cached_property
    def set_s(self) -> list[int]:
        """Primes p with p-1 and p+1 both practical."""
        pf, qf = self.pf, self.qf
        return [p for p in self.primes if p < self.bound and qf[p - 1] and qf[p + 1]]

    @cached_property
    def set_s_flags(self) -> bytearray:
        flags = bytearray(self.bound + 1)
        for p in self.set_s:
            flags[p] = 1
        return flags

    @cached_property
    def set_t(self) -> list[int]:
        """Practical q with q-1 and q+1 both prime."""
        pf, qf = self.pf, self.qf
        return [q for q in range(2, self.bound) if qf[q] and pf[q - 1] and pf[q + 1]]

    @cached_property
    def set_t_flags(self) -> bytearray:
        flags = bytearray(self.bound + 1)
        for q in self.set_t:
            flags[q] = 1
        return flags

    @cached_property
    def twin_lower_practical(self) -> list[int]:
        """Primes p with p+2 prime and p+1 practical (second-kind sandwiches)."""
        pf, qf = self.pf, self.qf
        return [p for p in self.primes if p + 2 <= self.bound and pf[p + 2] and qf[p + 1]]

    @cached_property
    def twin_lower_practical_flags(self) -> bytearray:
        flags = bytearray(self.bound + 1)
        for p in self.twin_lower_practical:
            flags[p] = 1
        return flags

    # x-pools for the twin families 6x+-1 / 6x+1,6x+5 / 2x+-3
    @cached_property
    def pool_a(self) -> list[int]:
        pf, top = self.pf, (self.bound - 1) // 6
        return [x for x in range(1, top + 1) if pf[6 * x - 1] and pf[6 * x + 1]]

    @cached_property
    def pool_b(self) -> list[int]:
        pf, top = self.pf, (self.bound - 5) // 6
        return [x for x in range(1, top + 1) if pf[6 * x + 1] and pf[6 * x + 5]]

    @cached_property
    def pool_c(self) -> list[int]:
        pf, top = self.pf, (self.bound - 3) // 2
        return [x for x in range(2, top + 1) if pf[2 * x - 3] and pf[2 * x + 3]]

    # -- small addend pools -----------------------------------------------------

    @cached_property
    def triangulars(self) -> list[int]:
        out, j = [], 0
        while j * (j + 1) // 2 <= self.bound:
            out.append(j * (j + 1) // 2)
            j += 1
        return out

    @cached_property
    def triangular_set(self) -> frozenset[int]:
        return frozenset(self.triangulars)

    @cached_property
    def fibonaccis(self) -> list[int]:
        vals, a, b = [0, 1], 1, 2
        while b <= self.bound:
            vals.append(b)
            a, b = b, a + b
        return sorted(set(vals))

    @cached_property
    def powers_of_two(self) -> list[int]:
        out, v = [], 2
        while v <= self.bound:
            out.append(v)
            v *= 2
        return out

    # -- alternating prime sums ---------------------------------------------------

    @cached_property
    def alt(self) -> AltSumTable:
        return alt_sum_table(self.table, len(self.primes))

    @cached_property
    def alt_values(self) -> list[int]:
        return self.alt.values()

    @cached_property
    def alt_value_set(self) -> frozenset[int]:
        return frozenset(self.alt_values)

    @cached_property
    def alt_index_by_value(self) -> dict[int, list[int]]:
        """value -> ascending indices j >= 1 with s_j = value."""
        idx: dict[int, list[int]] = {}
        for j, v in enumerate(self.alt_values, start=1):
            idx.setdefault(v, []).append(j)
        return idx

    def alt_upto(self, x) -> list[tuple[int, int]]:
        """(k, s_k) pairs with s_k <= x, ascending in k."""
        return [(k, v) for k, v in enumerate(self.alt_values, start=1) if v <= x]

    # -- sumset masks over S ------------------------------------------------------

    @cached_property
    def _s_mask(self) -> int:
        m = 0
        for p in self.set_s:
            m |= 1 << p
        return m

    def weighted_s_mask(self, weights: tuple[int, ...]) -> int:
        """Bitmask of {w1*p1 + ... + wk*pk : pi in S}, capped at the sieve bound."""
        cache = self.__dict__.setdefault("_ws_masks", {})
        if weights in cache:
            return cache[weights]
        cap = (1 << (self.bound + 1)) - 1
        acc = 1  # empty sum
        for w in weights:
            new = 0
            for p in self.set_s:
                shifted = acc << (w * p)
                if shifted > cap:
                    shifted &= cap
                new |= shifted
            acc = new & cap
        cache[weights] = acc
        return acc

    def coverage_guard(self, probe: int) -> None:
        if probe > self.bound:
            raise CoverageError(
                f"probe {probe} exceeds sieve bound {self.bound}; rebuild with a larger bound")
