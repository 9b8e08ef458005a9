"""Record types for the conjecture registry and range verification."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Optional

__all__ = [
    "ConjectureRecord",
    "Domain",
    "Expected",
    "VerificationReport",
    "exact",
    "exact_max",
    "no_failures",
    "verify_range",
]

DEFAULT_DESK_BOUND = 100_000


@dataclass(frozen=True)
class Domain:
    """Which n a conjecture quantifies over."""

    min_n: int = 1
    parity: Optional[str] = None  # 'odd' | 'even'
    mod: Optional[tuple[int, frozenset[int]]] = None
    extra: Optional[Callable[[int], bool]] = None
    description: str = ""

    def contains(self, n: int) -> bool:
        if n < self.min_n:
            return False
        if self.parity == "odd" and n % 2 == 0:
            return False
        if self.parity == "even" and n % 2:
            return False
        if self.mod is not None and n % self.mod[0] not in self.mod[1]:
            return False
        return self.extra is None or self.extra(n)

    def describe(self) -> str:
        if self.description:
            return self.description
        parts = [f"n >= {self.min_n}"]
        if self.parity:
            parts.append(self.parity)
        if self.mod:
            m, rs = self.mod
            parts.append(f"n mod {m} in {sorted(rs)}")
        return ", ".join(parts)


def not_square(n: int) -> bool:
    r = isqrt(n)
    return r * r != n


@dataclass(frozen=True)
class Expected:
    """What the published source claims about failures of the predicate.

    kind 'exact': the failing set is exactly `values` (within its domain).
    kind 'none':  no failures anywhere in the domain.
    kind 'max':   the largest failure is `max_failing`; nothing fails above it
                  (the full failing set below it is unpublished).
    """

    kind: str
    values: frozenset[int] = frozenset()
    max_failing: int = 0

    def in_range(self, lo: int, hi: int) -> Optional[list[int]]:
        if self.kind == "exact":
            return sorted(v for v in self.values if lo <= v <= hi)
        if self.kind == "none":
            return []
        return None  # 'max': full set unknown

    def matches(self, failures: list[int], lo: int, hi: int) -> bool:
        if self.kind in ("exact", "none"):
            return failures == self.in_range(lo, hi)
        above = [n for n in failures if n > self.max_failing]
        if above:
            return False
        if lo <= self.max_failing <= hi:
            return self.max_failing in failures
        return True

    def describe(self) -> str:
        if self.kind == "exact":
            return f"failures exactly {sorted(self.values)}"
        if self.kind == "none":
            return "no failures"
        return f"largest failure {self.max_failing}"


def exact(values) -> Expected:
    return Expected("exact", frozenset(values))


def no_failures() -> Expected:
    return Expected("none")


def exact_max(m: int) -> Expected:
    return Expected("max", max_failing=m)


@dataclass(frozen=True)
class ConjectureRecord:
    """One checkable claim: a per-n predicate plus its published outcome."""

    id: str
    summary: str
    domain: Domain
    check: Callable  # (ctx, n) -> witness (may be 0) or True, None/False on failure
    expected: Expected
    paper_bound: Optional[int] = None  # n-bound reported verified by the source
    notes: str = ""
    default_hi: Optional[int] = None
    bound_multiplier: int = 2  # sieve bound needed per unit of range hi

    def sieve_need(self, hi: int) -> int:
        return self.bound_multiplier * hi + 64

    def desk_bound(self) -> int:
        if self.default_hi is not None:
            return self.default_hi
        hi = DEFAULT_DESK_BOUND
        if self.expected.kind == "max":
            hi = max(hi, self.expected.max_failing + 1000)
        hi = max(hi, self.domain.min_n + 1000)
        return hi


@dataclass
class VerificationReport:
    id: str
    lo: int
    hi: int
    failures: list[int]
    expected: Optional[list[int]]
    matched: bool
    elapsed_ms: float
    checked: int = 0
    witness_samples: dict[int, object] = field(default_factory=dict)

    def to_dict(self, sieve_bound: int, version: str) -> dict:
        return {
            "id": self.id,
            "range": {"lo": self.lo, "hi": self.hi},
            "failures": self.failures,
            "expected": self.expected if self.expected is not None else [],
            "matched": self.matched,
            "witnesses_sampled": {str(k): list(v) if isinstance(v, tuple) else v
                                  for k, v in self.witness_samples.items()},
            "elapsed_ms": round(self.elapsed_ms, 3),
            "sieve_bound": sieve_bound,
            "version": version,
        }


def verify_range(
    record: ConjectureRecord,
    lo: int,
    hi: int,
    ctx,
    max_witnesses: int = 5,
    progress: Optional[Callable[[int, list[int], dict], None]] = None,
    progress_step: int = 10_000,
    start: Optional[int] = None,
    seed_failures: Optional[list[int]] = None,
    seed_witnesses: Optional[dict[int, object]] = None,
) -> VerificationReport:
    """Run the record's predicate over [lo, hi] and diff against expectations.

    `progress(completed_through, failures, witnesses)` fires every
    `progress_step` integers so callers can checkpoint; the `start`/`seed_*`
    arguments resume an interrupted run with identical final output.
    """
    t0 = time.perf_counter()
    failures: list[int] = list(seed_failures or [])
    witnesses: dict[int, object] = dict(seed_witnesses or {})
    checked = 0
    check, domain = record.check, record.domain
    n0 = lo if start is None else max(lo, start)
    next_tick = n0 + progress_step
    for n in range(n0, hi + 1):
        if domain.contains(n):
            checked += 1
            w = check(ctx, n)
            if w is None or w is False:  # 0 is a legitimate witness
                failures.append(n)
            elif len(witnesses) < max_witnesses and w is not True:
                witnesses[n] = w
        if progress is not None and n >= next_tick:
            progress(n, failures, witnesses)
            next_tick = n + progress_step
    elapsed = (time.perf_counter() - t0) * 1000
    return VerificationReport(
        id=record.id,
        lo=lo,
        hi=hi,
        failures=failures,
        expected=record.expected.in_range(lo, hi),
        matched=record.expected.matches(failures, lo, hi),
        elapsed_ms=elapsed,
        checked=checked,
        witness_samples=witnesses,
    )
