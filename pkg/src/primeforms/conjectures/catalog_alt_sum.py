"""Registry entries built on the alternating prime sums s_k = p_k - p_{k-1} + ... """

from __future__ import annotations

from .base import ConjectureRecord, Domain, exact, no_failures
from .engine import alt_rep_with_practical, residue_coverage

D = Domain


def _rec(add, rid, summary, domain, check, expected, bound=None, notes="", default_hi=None):
    add(ConjectureRecord(rid, summary, domain, check, expected, bound, notes, default_hi))


def register(add) -> None:
    def c51(ctx, m):
        top = ctx.pi(3 * m)
        for n in range(2, top + 1):
            if not ctx.ispr(ctx.alt.prime(n) + 1):
                continue
            k = alt_rep_with_practical(ctx, m, n)
            if k is not None:
                return (n, k)
        return None

    _rec(add, "C5.1", "m = p_n - p_{n-1} + ... +- p_k with k < n, p_n <= 3m, "
         "p_n+1 and p_k-1 both practical",
         D(1), c51, no_failures(), default_hi=20_000,
         notes="the f(m) limit claims are outside per-n verification")

    def c52(ctx, m):
        seen = bytearray(m)
        left = m
        for v in ctx.alt_values[:100_000]:
            r = v % m
            if not seen[r]:
                seen[r] = 1
                left -= 1
                if left == 0:
                    return True
        return None

    _rec(add, "C5.2", "every residue class mod m is hit by the alternating sums "
         "s_k (desk-scale coverage evidence for the infinitude claim)",
         D(1), c52, no_failures(), default_hi=200)

    def c53(ctx, n):
        for k, s in ctx.alt_upto(n - 2):
            p = n - s
            if ctx.isp(p) and ctx.isp(2 * p + 1):
                return (p, k)
        return None

    _rec(add, "C5.3", "n = p + s_k (k >= 1) with p a Sophie Germain prime",
         D(3), c53, no_failures(), 335 * 10**5)

    def c54i(ctx, n):
        qf = ctx.qf
        for k, s in ctx.alt_upto(n - 6):
            q = n - s
            if q >= 5 and qf[q] and qf[q - 4] and qf[q + 4]:
                return (q, k)
        return None

    _rec(add, "C5.4.i", "n = q + s_k with q, q-4, q+4 all practical",
         D(9), c54i, no_failures(), 5 * 10**6)

    def c54ii(ctx, n):
        sf = ctx.set_s_flags
        for k, s in ctx.alt_upto(n - 3):
            p = n - s
            if sf[p]:
                return (p, k)
        return None

    _rec(add, "C5.4.ii", "n = p + s_k with p in S",
         D(4), c54ii, exact({65, 365}))

    def c55(ctx, n):
        tri = ctx.triangular_set
        for k, s in ctx.alt_upto(n - 1):
            t = n - s
            if t >= 1 and t in tri:
                return (t, k)
        return None

    _rec(add, "C5.5", "n = j(j+1)/2 + s_k with j, k >= 1",
         D(2), c55, no_failures(), 6 * 10**6)

    for lam in (1, 2, 3):
        def c56(ctx, n, lam=lam):
            vals = ctx.alt_value_set
            for l, s in ctx.alt_upto((n - 1) // lam):
                if (n - lam * s) in vals:
                    return (l, n - lam * s)
            return None

        _rec(add, f"C5.6(lambda={lam})", f"n = s_k + {lam}*s_l with k, l >= 1",
             D(lam + 1), c56, no_failures())

    def c57i(ctx, n):
        for k, s in ctx.alt_upto(n - 2):
            p = n - s
            if ctx.isp(p) and ctx.isp(p + 6):
                return (p, k)
        return None

    _rec(add, "C5.7.i", "n = p + s_k with p and p+6 prime",
         D(6), c57i, no_failures())

    def c57ii_a(ctx, n):
        for k, s in ctx.alt_upto(n - 1):
            q = n - s
            if ctx.isp(3 * q - 1) and ctx.isp(3 * q + 1):
                return (q, k)
        return None

    _rec(add, "C5.7.ii.a", "n = q + s_k with 3q-1 and 3q+1 prime",
         D(3), c57ii_a, no_failures())

    def c57ii_b(ctx, n):
        for k, s in ctx.alt_upto(n - 1):
            q = n - s
            if ctx.isp(3 * q - 2) and ctx.isp(3 * q + 2):
                return (q, k)
        return None

    _rec(add, "C5.7.ii.b", "n = q + s_k with 3q-2 and 3q+2 prime",
         D(4), c57ii_b, no_failures())
