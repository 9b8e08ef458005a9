"""Verification engine for conjectures on primes, practical numbers and quadratic forms."""

from . import arith, congruence, quadform, sequences, sieve

__version__ = "0.1.0"

__all__ = ["arith", "congruence", "quadform", "sequences", "sieve", "__version__"]
