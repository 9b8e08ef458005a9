"""Bulk generation and classification of primes and practical numbers.

A practical number n is one for which every m <= n is a sum of distinct
divisors of n.  Stewart's criterion characterises them: n = 1, or n is even
and, processing the prime factorisation p1^a1 * ... * ps^as in increasing
prime order, each p_{k+1} <= sigma(p1^a1 * ... * pk^ak) + 1.
"""

from __future__ import annotations

import bisect
from array import array
from enum import Enum
from math import isqrt

import numpy as np

from . import arith

__all__ = ["CoverageError", "PairKind", "SieveTable", "build"]


class CoverageError(Exception):
    """A probe or enumeration exceeded the sieve's tabulated bound."""


class PairKind(Enum):
    TWIN = "twin"                      # p and p+2 prime
    COUSIN = "cousin"                  # p and p+4 prime
    SEXY = "sexy"                      # p and p+6 prime
    SOPHIE_GERMAIN = "sophie-germain"  # p and 2p+1 prime
    SANDWICH_FIRST = "sandwich-first"  # p prime, p-1 and p+1 practical
    SANDWICH_SECOND = "sandwich-second"  # p, p+2 prime, p+1 practical
    SET_S = "set-s"                    # prime p with p-1, p+1 practical (= sandwich-first)
    SET_T = "set-t"                    # practical q with q-1, q+1 prime


def _smallest_prime_factors(bound: int) -> np.ndarray:
    spf = np.zeros(bound + 1, dtype=np.uint32)
    for p in range(2, isqrt(bound) + 1):
        if spf[p] == 0:
            spf[p] = p
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[:2] = 0
    return spf


def _practical_flags(bound: int, primes: list[int]) -> bytearray:
    """Practicality bitmap via ordered generation from Stewart's criterion.

    Every practical number factors as an ascending chain of prime powers in
    which each new prime stays within sigma(prefix) + 1, so a DFS over such
    chains enumerates each practical number exactly once.
    """
    flags = bytearray(bound + 1)
    if bound >= 1:
        flags[1] = 1
    stack = [(1, 1, 0)]  # (value, sigma(value), index of first admissible prime)
    nprimes = len(primes)
    while stack:
        m, sig, j = stack.pop()
        cap = bound // m
        limit = sig + 1 if sig + 1 < cap else cap
        while j < nprimes:
            p = primes[j]
            if p > limit:
                break
            j += 1
            v = m * p
            power_sigma = 1 + p
            while True:
                flags[v] = 1
                stack.append((v, sig * power_sigma, j))
                if v > bound // p:
                    break
                v *= p
                power_sigma = power_sigma * p + 1
    return flags


class SieveTable:
    """Immutable tables of primality, least prime factors and practicality.

    Point queries (is_prime / is_practical / sigma / factorization) fall back
    to direct computation beyond the tabulated bound; enumeration helpers
    raise CoverageError instead.
    """

    def __init__(self, bound: int):
        if bound < 2:
            raise ValueError("sieve bound must be at least 2")
        self.bound = bound
        spf = _smallest_prime_factors(bound)
        self._spf = array("I", spf.tobytes())
        idx = np.arange(bound + 1, dtype=np.uint32)
        prime_mask = spf == idx
        prime_mask[:2] = False
        self.prime_flags = bytearray(prime_mask.view(np.uint8).tobytes())
        self._primes = np.flatnonzero(prime_mask).tolist()
        self.practical_flags = _practical_flags(bound, self._primes)

    # -- primes ------------------------------------------------------------

    @property
    def primes(self) -> list[int]:
        return self._primes

    def is_prime(self, n: int) -> bool:
        if 0 <= n <= self.bound:
            return bool(self.prime_flags[n])
        return n > 0 and arith.is_prime(n)

    def nth_prime(self, i: int) -> int:
        if i < 1 or i > len(self._primes):
            raise IndexError(f"prime index {i} outside tabulated range")
        return self._primes[i - 1]

    def prime_count(self, x: int) -> int:
        if x > self.bound:
            raise CoverageError(f"prime count at {x} exceeds bound {self.bound}")
        return bisect.bisect_right(self._primes, x)

    def primes_in(self, lo: int, hi: int) -> list[int]:
        """Primes p with lo <= p <= hi (requires hi within the table)."""
        if hi > self.bound:
            raise CoverageError(f"prime range {hi} exceeds bound {self.bound}")
        i = bisect.bisect_left(self._primes, lo)
        j = bisect.bisect_right(self._primes, hi)
        return self._primes[i:j]

    # -- factorisation -----------------------------------------------------

    def factorization(self, n: int) -> list[tuple[int, int]]:
        """Prime factorisation of n >= 1 as ascending (prime, exponent) pairs."""
        if n < 1:
            raise ValueError("factorization requires n >= 1")
        if n <= self.bound:
            spf = self._spf
            out = []
            while n > 1:
                p = spf[n]
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
            return out
        out = []
        rest = n
        for p in self._primes:
            if p * p > rest:
                break
            if rest % p == 0:
                rest, e = arith.strip_factor(rest, p)
                out.append((p, e))
        if rest > 1:
            if rest <= self.bound or arith.is_prime(rest):
                out.append((rest, 1))
            else:
                import sympy

                for p, e in sorted(sympy.factorint(rest).items()):
                    out.append((int(p), int(e)))
                out.sort()
        return out

    def sigma(self, n: int) -> int:
        """Sum of all positive divisors of n."""
        total = 1
        for p, e in self.factorization(n):
            total *= (p ** (e + 1) - 1) // (p - 1)
        return total

    # -- practical numbers ---------------------------------------------------

    def is_practical(self, n: int) -> bool:
        if n < 1:
            return False
        if n <= self.bound:
            return bool(self.practical_flags[n])
        if n % 2:
            return False
        return self._practical_big(n)

    def _practical_big(self, n: int) -> bool:
        rest, e = arith.strip_factor(n, 2)
        sig = 2 ** (e + 1) - 1
        for p in self._primes[1:]:
            if rest == 1 or rest <= sig + 1:
                # every remaining prime factor is <= rest <= sigma + 1
                return True
            if p * p > rest:
                # rest is prime: it is the one remaining factor
                return rest <= sig + 1
            if p > sig + 1:
                return False
            if rest % p == 0:
                rest, e = arith.strip_factor(rest, p)
                sig *= (p ** (e + 1) - 1) // (p - 1)
        if rest == 1 or rest <= sig + 1:
            return True
        if arith.is_prime(rest):
            return rest <= sig + 1
        import sympy

        for p, e in sorted(sympy.factorint(rest).items()):
            if p > sig + 1:
                return False
            sig *= (p ** (e + 1) - 1) // (p - 1)
        return True

    def is_practical_product(self, *parts: int) -> bool:
        """Practicality of the product of in-table parts, via merged factorisations.

        Avoids factoring the (possibly huge) product itself.
        """
        merged: dict[int, int] = {}
        for part in parts:
            for p, e in self.factorization(part):
                merged[p] = merged.get(p, 0) + e
        if not merged:
            return True  # empty product = 1
        sig = 1
        for p in sorted(merged):
            if p > sig + 1:
                return False
            sig *= (p ** (merged[p] + 1) - 1) // (p - 1)
        return True

    # -- classification ------------------------------------------------------

    def classify(self, n: int, kind: PairKind) -> bool:
        """Whether n satisfies the kind's defining predicate (see PairKind)."""
        probes = {
            PairKind.TWIN: (n + 2,),
            PairKind.COUSIN: (n + 4,),
            PairKind.SEXY: (n + 6,),
            PairKind.SOPHIE_GERMAIN: (2 * n + 1,),
            PairKind.SANDWICH_FIRST: (n + 1,),
            PairKind.SANDWICH_SECOND: (n + 2,),
            PairKind.SET_S: (n + 1,),
            PairKind.SET_T: (n + 1,),
        }[kind]
        if n < 1 or max(probes) > self.bound:
            raise CoverageError(f"classification probe for {n} exceeds bound {self.bound}")
        pf, qf = self.prime_flags, self.practical_flags
        if kind is PairKind.TWIN:
            return bool(pf[n] and pf[n + 2])
        if kind is PairKind.COUSIN:
            return bool(pf[n] and pf[n + 4])
        if kind is PairKind.SEXY:
            return bool(pf[n] and pf[n + 6])
        if kind is PairKind.SOPHIE_GERMAIN:
            return bool(pf[n] and pf[2 * n + 1])
        if kind in (PairKind.SANDWICH_FIRST, PairKind.SET_S):
            return bool(pf[n] and qf[n - 1] and qf[n + 1])
        if kind is PairKind.SANDWICH_SECOND:
            return bool(pf[n] and pf[n + 2] and qf[n + 1])
        return bool(qf[n] and pf[n - 1] and pf[n + 1])  # SET_T

    def members(self, kind: str, limit: int | None = None) -> list[int]:
        """Sorted members up to limit: 'primes', 'practical', 'set-s' or 'set-t'."""
        hi = self.bound if limit is None else min(limit, self.bound)
        if limit is not None and limit > self.bound:
            raise CoverageError(f"member listing to {limit} exceeds bound {self.bound}")
        if kind == "primes":
            return self.primes_in(2, hi)
        if kind == "practical":
            qf = self.practical_flags
            return [n for n in range(1, hi + 1) if qf[n]]
        if kind == "set-s":
            pf, qf = self.prime_flags, self.practical_flags
            return [n for n in range(2, min(hi, self.bound - 1) + 1)
                    if pf[n] and qf[n - 1] and qf[n + 1]]
        if kind == "set-t":
            pf, qf = self.prime_flags, self.practical_flags
            return [n for n in range(2, min(hi, self.bound - 1) + 1)
                    if qf[n] and pf[n - 1] and pf[n + 1]]
        raise ValueError(f"unknown member kind {kind!r}")


def build(bound: int) -> SieveTable:
    """Build a SieveTable covering [0, bound]."""
    return SieveTable(bound)
