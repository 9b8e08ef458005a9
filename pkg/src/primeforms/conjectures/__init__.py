"""Declarative registry of checkable conjecture predicates with published
exception sets and thresholds, plus range verification over a shared context."""

from __future__ import annotations

from .base import (
    ConjectureRecord,
    Domain,
    Expected,
    VerificationReport,
    verify_range,
)
from .context import RunContext
from .engine import (
    ScanResult,
    alt_sum_rep,
    collatz_step_f,
    collatz_step_g,
    least_alt_f,
    residue_coverage,
    sumset_cover,
    threshold_scan,
    trajectory,
)
from . import catalog_alt_sum, catalog_combined, catalog_one_prime, catalog_two_prime

__all__ = [
    "ConjectureRecord",
    "Domain",
    "Expected",
    "REGISTRY",
    "RunContext",
    "ScanResult",
    "VerificationReport",
    "alt_sum_rep",
    "collatz_step_f",
    "collatz_step_g",
    "get",
    "least_alt_f",
    "residue_coverage",
    "sumset_cover",
    "threshold_scan",
    "trajectory",
    "verify_range",
]


def _build() -> dict[str, ConjectureRecord]:
    registry: dict[str, ConjectureRecord] = {}

    def add(record: ConjectureRecord) -> None:
        if record.id in registry:
            raise ValueError(f"duplicate conjecture id {record.id}")
        registry[record.id] = record

    catalog_one_prime.register(add)
    catalog_two_prime.register(add)
    catalog_combined.register(add)
    catalog_alt_sum.register(add)
    return registry


REGISTRY: dict[str, ConjectureRecord] = _build()


def get(rid: str) -> ConjectureRecord:
    try:
        return REGISTRY[rid]
    except KeyError:
        raise KeyError(f"unknown conjecture id {rid!r}; see the registry listing") from None
