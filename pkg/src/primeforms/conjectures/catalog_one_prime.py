"""Registry entries searching over a single prime (or practical) variable,
plus the root-monotonicity and sum-of-two-practicals entries."""

from __future__ import annotations

from ..arith import jacobi
from .base import ConjectureRecord, Domain, exact, no_failures, not_square
from .engine import CapExceeded, collatz_step_f, collatz_step_g, trajectory

D = Domain


def _rec(add, rid, summary, domain, check, expected, bound=None, notes="", default_hi=None):
    add(ConjectureRecord(rid, summary, domain, check, expected, bound, notes, default_hi))


def register(add) -> None:
    _root_monotone(add)
    _practical_sums(add)
    _c21(add)
    _c22(add)
    _c23_24_25(add)
    _c26_27(add)
    _c28_29(add)
    _c210_213(add)
    _c214(add)


# -- root monotonicity and practical-number analogues (introduction) -----------


def _root_monotone(add) -> None:
    def primes_root(ctx, n):
        seq = ctx.primes
        if n + 1 > len(seq):
            from ..sieve import CoverageError

            raise CoverageError("prime table too small for root comparison")
        return seq[n - 1] ** (n + 1) > seq[n] ** n

    _rec(add, "R1.firoozbakht", "p_n^(1/n) strictly decreasing",
         D(1), primes_root, no_failures(), notes="desk-scale evidence only",
         default_hi=10_000)

    def practical_root(ctx, n):
        seq = ctx.practicals
        if n + 1 > len(seq):
            from ..sieve import CoverageError

            raise CoverageError("practical table too small for root comparison")
        return seq[n - 1] ** (n + 1) > seq[n] ** n

    _rec(add, "R1.practical-root", "a_n^(1/n) strictly decreasing for n >= 3 "
         "(a_n the n-th practical number)",
         D(3), practical_root, no_failures(), default_hi=10_000)

    def sandwich_root(ctx, n):
        seq = ctx.set_s
        if n + 1 > len(seq):
            from ..sieve import CoverageError

            raise CoverageError("sandwich list too small for root comparison")
        return seq[n - 1] ** (n + 1) > seq[n] ** n

    _rec(add, "R2.sandwich-root", "central primes of first-kind sandwiches: "
         "s_n^(1/n) strictly decreasing for n >= 9",
         D(9), sandwich_root, no_failures(), default_hi=3000)


def _practical_sums(add) -> None:
    def margenstern(ctx, n):
        qf = ctx.qf
        for x in ctx.practicals:
            if 2 * x > n:
                break
            if qf[n - x]:
                return (x, n - x)
        return None

    _rec(add, "R1.margenstern", "every positive even integer is a sum of two "
         "practical numbers", D(2, parity="even"), margenstern, no_failures(),
         notes="proved by Melfi; kept as a registry sanity entry")


# -- C2.1 .. C2.2: twinned linear conditions around 2n ---------------------------


def _c21(add) -> None:
    def i_a(ctx, n):
        t, pf = 2 * n, ctx.pf
        for p in ctx.primes:
            if p > n:
                break
            if pf[t - p] and ctx.isp(t + p - 2):
                return p
        return None

    _rec(add, "C2.1.i.a", "prime p <= n with 2n-p and 2n+p-2 prime",
         D(1), i_a, exact({1, 2, 4, 6, 10, 22, 57}), 7 * 10**7)

    def i_b(ctx, n):
        t = 2 * n
        for p in ctx.primes_in(n + 1, t - 1):
            if ctx.pf[t - p] and ctx.isp(t + p - 2):
                return p
        return None

    _rec(add, "C2.1.i.b", "prime p in (n,2n) with 2n-p and 2n+p-2 prime",
         D(1), i_b, exact({1, 2, 3, 5, 8, 87, 108}), 7 * 10**7)

    def ii_a(ctx, n):
        t, pf = 2 * n, ctx.pf
        for p in ctx.primes:
            if p > n:
                break
            if pf[t - p] and ctx.isp(t + p + 2):
                return p
        return None

    _rec(add, "C2.1.ii.a", "prime p <= n with 2n-p and 2n+p+2 prime",
         D(1), ii_a, exact({1, 2, 9, 21, 191}), 7 * 10**7)

    def ii_b(ctx, n):
        t = 2 * n
        for p in ctx.primes_in(n, t - 1):
            if ctx.pf[t - p] and ctx.isp(t + p + 2):
                return p
        return None

    _rec(add, "C2.1.ii.b", "prime p in [n,2n) with 2n-p and 2n+p+2 prime",
         D(1), ii_b, exact({1, 2, 4, 6, 10, 15}), 7 * 10**7,
         notes="left-closed interval: the open reading contradicts the "
         "published exception set at n = 3 and 7")

    def iii_a(ctx, n):
        t = 2 * n
        for p in ctx.primes:
            if p >= n:
                break
            if ctx.isp(t - 2 * p + 1) and ctx.isp(t + 2 * p - 1):
                return p
        return None

    _rec(add, "C2.1.iii.a", "prime p < n with 2n-2p+1 and 2n+2p-1 prime",
         D(4), iii_a, no_failures(), 7 * 10**7)

    def iii_b(ctx, n):
        t = 2 * n
        for p in ctx.primes:
            if p >= n:
                break
            if t - 2 * p - 1 >= 2 and ctx.isp(t - 2 * p - 1) and ctx.isp(t + 2 * p + 1):
                return p
        return None

    _rec(add, "C2.1.iii.b", "prime p < n with 2n-2p-1 and 2n+2p+1 prime",
         D(4), iii_b, exact({7, 8, 10, 32}), 7 * 10**7)


def _c22(add) -> None:
    def i_a(ctx, n):
        t = 2 * n
        for p in ctx.primes[1:]:
            if p > n:
                break
            if ctx.pf[t - p] and ctx.isp(n + (p + 1) // 2):
                return p
        return None

    _rec(add, "C2.2.i.a", "odd prime p <= n with 2n-p and n+(p+1)/2 prime",
         D(475), i_a, no_failures(), 10**7)

    def i_b(ctx, n):
        t = 2 * n
        for p in ctx.primes_in(n + 1, t - 1):
            if ctx.pf[t - p] and ctx.isp(n + (p + 1) // 2):
                return p
        return None

    _rec(add, "C2.2.i.b", "prime p in (n,2n) with 2n-p and n+(p+1)/2 prime",
         D(415), i_b, no_failures(), 10**7)

    def ii_a(ctx, n):
        for p in ctx.primes[1:]:
            if p > n:
                break
            v = n - (p + 1) // 2
            if v >= 2 and ctx.pf[v] and ctx.isp(2 * n + p):
                return p
        return None

    _rec(add, "C2.2.ii.a", "odd prime p <= n with 2n+p and n-(p+1)/2 prime",
         D(527), ii_a, no_failures(), 10**7)

    def ii_b(ctx, n):
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            v = n - (p + 1) // 2
            if v >= 2 and ctx.pf[v] and ctx.isp(2 * n + p):
                return p
        return None

    _rec(add, "C2.2.ii.b", "prime p in (n,2n) with 2n+p and n-(p+1)/2 prime",
         D(1133), ii_b, no_failures(), 10**7)

    def iii_a(ctx, n):
        base = n + (n & 1)
        for p in ctx.primes:
            if p > n:
                break
            v = base - p
            if v >= 2 and ctx.pf[v] and ctx.isp(2 * n + 2 * p + 1):
                return p
        return None

    _rec(add, "C2.2.iii.a", "prime p <= n with n+(n mod 2)-p and 2n+2p+1 prime",
         D(1), iii_a, exact({1, 2, 7, 12, 91}), 10**7)

    def iii_b(ctx, n):
        base = n + (n & 1)
        for p in ctx.primes:
            if p > n:
                break
            if ctx.isp(base + p) and ctx.isp(2 * n - 2 * p + 1):
                return p
        return None

    _rec(add, "C2.2.iii.b", "prime p <= n with n+(n mod 2)+p and 2n-2p+1 prime",
         D(6), iii_b, no_failures(), 10**7)

    def iv_a(ctx, n):
        base = n + (n & 1)
        sign = 1 if n % 2 == 0 else -1
        for p in ctx.primes:
            if p > n:
                break
            v = base - p
            if v >= 2 and ctx.pf[v] and ctx.isp(2 * n + 2 * p - sign):
                return p
        return None

    _rec(add, "C2.2.iv.a", "prime p <= n with n+(n mod 2)-p and 2n+2p-(-1)^n prime",
         D(1), iv_a, exact({1, 2, 7, 8, 91, 92}), 10**7)

    def iv_b(ctx, n):
        base = n + (n & 1)
        sign = 1 if n % 2 == 0 else -1
        for p in ctx.primes:
            if p > n:
                break
            if ctx.isp(base + p) and ctx.isp(2 * n - 2 * p - sign):
                return p
        return None

    _rec(add, "C2.2.iv.b", "prime p <= n with n+(n mod 2)+p and 2n-2p-(-1)^n prime",
         D(7), iv_b, no_failures(), 10**7)


def _c23_24_25(add) -> None:
    def c23i(ctx, n):
        t = 2 * n
        for p in ctx.primes:
            if p >= n:
                break
            if ctx.pf[t - p] and ctx.isp(t + 2 * p - 3) and ctx.isp(t + 2 * p + 3):
                return p
        return None

    _rec(add, "C2.3.i", "prime p < n with 2n-p, 2n+2p-3 and 2n+2p+3 prime",
         D(2720), c23i, no_failures(), 10**7)

    def c23ii(ctx, n):
        t = 2 * n
        for p in ctx.primes:
            if p >= n:
                break
            if (t + 1 - 2 * p >= 2 and ctx.isp(t + 1 - 2 * p)
                    and ctx.isp(t + p - 2) and ctx.isp(t + p + 4)):
                return p
        return None

    _rec(add, "C2.3.ii", "prime p < n with 2n+1-2p, 2n+p-2 and 2n+p+4 prime",
         D(9075), c23ii, no_failures(), 10**7)

    def c24i(ctx, n):
        m = 6 * n
        for p in ctx.primes:
            if p >= n:
                break
            if ctx.pf[m - p] and ctx.isp(m + p):
                return p
        return None

    _rec(add, "C2.4.i", "prime p < n with 6n-p and 6n+p prime",
         D(6), c24i, no_failures(), 10**8)

    for tag, poly, lo in (
        ("tri", lambda n: n * (n + 1) // 2, 1934),
        ("sq", lambda n: n * n, 2427),
        ("cube", lambda n: n**3, 6773),
        ("quart", lambda n: n**4, 24980),
    ):
        def c24ii(ctx, n, poly=poly):
            m = 6 * poly(n)
            for p in ctx.primes:
                if p >= n:
                    break
                if ctx.isp(m - p) and ctx.isp(m + p):
                    return p
            return None

        _rec(add, f"C2.4.ii.{tag}", f"prime p < n with 6P(n)+-p prime, P = {tag}",
             D(lo), c24ii, no_failures(),
             notes="threshold from the published sufficiency table")

    def c25i_a(ctx, n):
        a, b = n * n - n, n * n + n
        for p in ctx.primes:
            if p > n:
                break
            if ctx.isp(a + p) and ctx.isp(b - p):
                return p
        return None

    _rec(add, "C2.5.i.a", "prime p <= n with n^2-n+p and n^2+n-p prime",
         D(2733), c25i_a, no_failures(), 10**7)

    def c25i_b(ctx, n):
        a, b = n * n - n, n * n + n
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if ctx.isp(a + p) and ctx.isp(b - p):
                return p
        return None

    _rec(add, "C2.5.i.b", "prime p in (n,2n) with n^2-n+p and n^2+n-p prime",
         D(3513), c25i_b, no_failures(), 10**7)

    def c25ii_a(ctx, n):
        nn = n * n
        for p in ctx.primes:
            if p > n:
                break
            if ctx.isp(nn - n - p) and ctx.isp(nn + n + p):
                return p
        return None

    _rec(add, "C2.5.ii.a", "prime p <= n with n^2-(n+p) and n^2+(n+p) prime",
         D(1829), c25ii_a, no_failures(), 10**7)

    def c25ii_b(ctx, n):
        nn = n * n
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if ctx.isp(nn - n - p) and ctx.isp(nn + n + p):
                return p
        return None

    _rec(add, "C2.5.ii.b", "prime p in (n,2n) with n^2-(n+p) and n^2+(n+p) prime",
         D(4518), c25ii_b, no_failures(), 10**7)


def _c26_27(add) -> None:
    variants = [
        ("C2.6.i.a", "prime p <= n with (2n)^2+p prime",
         lambda n, p: (2 * n) ** 2 + p, exact({1, 2, 3, 10, 28, 40, 218}), D(1)),
        ("C2.6.i.b", "prime p <= n with (2n-1)^2+2p prime",
         lambda n, p: (2 * n - 1) ** 2 + 2 * p, exact({1, 5, 12, 21, 28}), D(1)),
        ("C2.6.ii.a", "prime p <= n with (2n)^2+p^2 prime",
         lambda n, p: (2 * n) ** 2 + p * p, exact({1, 2, 3, 6, 7, 57}), D(1)),
        ("C2.6.ii.b", "prime p <= n with (2n-1)^2+(2p)^2 prime",
         lambda n, p: (2 * n - 1) ** 2 + 4 * p * p, exact({1, 2, 4, 17, 19, 57}), D(1)),
        ("C2.6.iii.a", "prime p <= n with (2n)^4+p^2 prime",
         lambda n, p: (2 * n) ** 4 + p * p, no_failures(), D(142)),
        ("C2.6.iii.b", "prime p <= n with (2n-1)^4+(2p)^2 prime",
         lambda n, p: (2 * n - 1) ** 4 + 4 * p * p, exact({1, 24, 39, 47, 89}), D(1)),
        ("C2.6.iv.a", "prime p <= n with (2n)^4+p^4 prime",
         lambda n, p: (2 * n) ** 4 + p**4, exact({1, 2, 3, 5, 6, 11, 22, 35, 40}), D(1)),
        ("C2.6.iv.b", "prime p <= n with (2n-1)^4+(2p)^4 prime",
         lambda n, p: (2 * n - 1) ** 4 + 16 * p**4, exact({1, 33}), D(1)),
    ]
    for rid, summary, val, expected, dom in variants:
        def chk(ctx, n, val=val):
            for p in ctx.primes:
                if p > n:
                    break
                if ctx.isp(val(n, p)):
                    return p
            return None

        notes = ("garbled source clause read as an exception list, parallel "
                 "to the sibling clauses") if rid == "C2.6.iv.a" else ""
        _rec(add, rid, summary, dom, chk, expected, 5 * 10**6, notes)

    def c27(ctx, n):
        for p in ctx.primes:
            if p > n:
                break
            if ctx.isp(n + (n - p) ** 4):
                return p
        return None

    _rec(add, "C2.7", "prime p <= n with n+(n-p)^4 prime",
         D(3, parity="odd"), c27, exact({9, 189}))


def _c28_29(add) -> None:
    def c28a(ctx, n):
        for p in ctx.primes_in(n * n + 1, (n + 1) ** 2 - 1):
            if p != 2 and jacobi(n, p) == 1:
                return p
        return None

    _rec(add, "C2.8.a", "prime p in (n^2,(n+1)^2) with (n/p) = 1",
         D(1), c28a, no_failures(), 10**9, default_hi=1400)

    def c28b(ctx, n):
        m = n * (n + 1)
        for p in ctx.primes_in(n * n + 1, (n + 1) ** 2 - 1):
            if jacobi(m, p) == 1:
                return p
        return None

    _rec(add, "C2.8.b", "prime p in (n^2,(n+1)^2) with (n(n+1)/p) = 1",
         D(2), c28b, no_failures(), 10**9, default_hi=1400)

    def c29i_a(ctx, n):
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if jacobi(n, p) == 1:
                return p
        return None

    _rec(add, "C2.9.i.a", "prime p in (n,2n) with (n/p) = 1",
         D(9), c29i_a, exact({14}), 5 * 10**8)

    def c29i_b(ctx, n):
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if jacobi(n, p) == -1:
                return p
        return None

    _rec(add, "C2.9.i.b", "prime p in (n,2n) with (n/p) = -1, n not a square",
         D(2, extra=not_square), c29i_b, no_failures(), 5 * 10**8)

    def c29ii_a(ctx, n):
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if jacobi(2 * n, p) == 1:
                return p
        return None

    _rec(add, "C2.9.ii.a", "prime p in (n,2n) with (2n/p) = 1",
         D(6), c29ii_a, no_failures(), 5 * 10**8)

    def c29ii_b(ctx, n):
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if jacobi(-n, p) == -1:
                return p
        return None

    _rec(add, "C2.9.ii.b", "prime p in (n,2n) with (-n/p) = -1",
         D(7), c29ii_b, no_failures(), 5 * 10**8)


def _c210_213(add) -> None:
    def c210a(ctx, n):
        for p in ctx.primes_in(n, 2 * n):
            if ctx.isp(2 * p + 1):
                return p
        return None

    _rec(add, "C2.10.a", "Sophie Germain prime in [n,2n]",
         D(1), c210a, no_failures(), 5 * 10**8)

    def c210b(ctx, n):
        for p in ctx.primes_in(n, 2 * n):
            if ctx.isp(p + 2) and ctx.isp(2 * p + 1):
                return p
        return None

    _rec(add, "C2.10.b", "prime p in [n,2n] with p+2 and 2p+1 prime",
         D(90), c210b, no_failures(), 5 * 10**8)

    def c211i(ctx, n):
        qf = ctx.qf
        ctx.coverage_guard(2 * n)
        for p in ctx.primes_in(n + 1, 2 * n - 1):
            if qf[p - 1] and qf[p + 1]:
                return p
        return None

    _rec(add, "C2.11.i", "first-kind sandwich {p-1,p,p+1} inside [n,2n]",
         D(9), c211i, no_failures(),
         notes="read as: the whole triple lies in the interval")

    def c211ii(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        ctx.coverage_guard(2 * n)
        for p in ctx.primes_in(n, 2 * n - 2):
            if pf[p + 2] and qf[p + 1]:
                return p
        return None

    _rec(add, "C2.11.ii", "second-kind sandwich {p,p+1,p+2} inside [n,2n]",
         D(7), c211ii, no_failures())

    def c211iii(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        ctx.coverage_guard(2 * n)
        for p in ctx.primes_in(n + 1, 2 * n - 2):
            if pf[p + 2] and qf[p - 1] and qf[p + 1]:
                return p
        return None

    _rec(add, "C2.11.iii", "p-1,p,p+1,p+2 in [n,2n] with {p,p+2} twin primes "
         "and {p-1,p+1} both practical", D(232), c211iii, no_failures(),
         notes="part (iv) is an infinitude claim, not per-n checkable")

    def c212i(ctx, n):
        pf = ctx.pf
        for k in ctx.practicals:
            if k >= n:
                break
            v = k * n
            if ctx.isp(v - 1) and ctx.isp(v + 1) and ctx.practical_product(k, n):
                return k
        return None

    _rec(add, "C2.12.i", "practical k < n with kn-1, kn+1 twin primes and kn practical",
         D(912), c212i, no_failures(), default_hi=20_000)

    def c212ii_a(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        for k in range(2, n - 1):
            if (pf[k - 1] and pf[k + 1] and qf[k] and qf[k + 2]
                    and ctx.practical_product(k, n)):
                return k
        return None

    _rec(add, "C2.12.ii.a", "k-1,k,k+1,k+2 in [1,n] with k-1, k+1 prime and "
         "k, k+2, kn practical", D(200), c212ii_a, no_failures(), default_hi=20_000)

    def c212ii_b(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        for m in range(3, n - 1):
            if (pf[m - 1] and pf[m + 1] and qf[m - 2] and qf[m] and qf[m + 2]
                    and ctx.practical_product(m, n)):
                return m
        return None

    _rec(add, "C2.12.ii.b", "m-2..m+2 in [1,n] with m-1, m+1 prime and "
         "m-2, m, m+2, mn practical", D(26864), c212ii_b, no_failures(),
         default_hi=40_000)

    def c213(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        ctx.coverage_guard(2 * n)
        for p in ctx.practicals:
            if p >= n:
                break
            a, b = n - p, n + p
            if (pf[a] and pf[b]) or (qf[a] and qf[b]):
                return p
        return None

    _rec(add, "C2.13", "practical p < n with n-p and n+p both prime or both practical",
         D(3), c213, no_failures(), 10**8)


def _c214(add) -> None:
    def f_reaches(ctx, n):
        try:
            return len(trajectory(n, lambda v: collatz_step_f(ctx, v), cap=10_000))
        except CapExceeded:
            return None

    _rec(add, "C2.14.i", "iterating f (prime-pair halving map) from n reaches 4",
         D(3), f_reaches, no_failures(), default_hi=10_000)

    def g_reaches(ctx, n):
        try:
            return len(trajectory(n, lambda v: collatz_step_g(ctx, v), cap=10_000))
        except CapExceeded:
            return None

    _rec(add, "C2.14.ii", "iterating g (practical-pair halving map) from n reaches 4",
         D(4), g_reaches, no_failures(), default_hi=10_000)
