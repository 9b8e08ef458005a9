"""Registry entries decomposing n into two prime variables with side conditions.

The recurring shape is n = p + (1 + (n mod 2))q: a Goldbach-type split for
even n and a Lemoine-type one for odd n.  Weights 1 + ((-n) mod 6) and
1 + (n mod 6) appear in the cousin/twin refinements.
"""

from __future__ import annotations

from ..arith import jacobi
from .base import ConjectureRecord, Domain, exact, exact_max, no_failures
from .engine import e_check, estar_check, s_check

D = Domain

# the published exception list for the x^2+3xy+y^2 refinement
EXC_3_7 = (1, 2, 3, 4, 5, 6, 10, 32, 38, 40, 51, 56, 61, 66, 91, 119, 131,
           148, 188, 191, 193, 223, 226, 248, 296, 356, 373, 398, 428, 934,
           964, 1012, 1136, 1187)

# exact published exception sets for the (2^a+2)(p+q)^2+pq family
E_SETS = {
    0: (1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 14, 15, 22, 59, 61, 62, 68, 104),
    1: (1, 2, 3, 4, 5, 6, 7, 9, 12, 14, 15, 20, 21, 27, 32, 38, 61, 68,
        146, 188, 212, 383, 746),
    3: (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 15, 16, 18, 19, 21, 22, 28, 39,
        46, 52, 62, 63, 121, 131, 158, 226, 692),
    4: (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 19, 20, 22,
        25, 28, 35, 39, 46, 56, 58, 68, 73, 122, 124, 205, 227),
}
E_MAX = {5: 2468, 6: 476, 7: 796, 8: 4633, 9: 1642, 10: 2012, 11: 3400, 12: 1996}

ESTAR_SET_3 = (1, 3, 5, 7, 31, 73)
ESTAR_MAX = {1: 3449, 2: 1711, 5: 6227, 6: 1051, 7: 2239, 8: 2599, 9: 7723,
             10: 781, 11: 1163, 12: 587}

# published s(m) thresholds for |m| <= 50
S_TABLE = {
    0: 1239, 1: 1470, -1: 2192, 2: 1034, -2: 1292, 3: 1698, -3: 1788,
    4: 848, -4: 1458, 5: 1490, -5: 2558, 6: 1115, -6: 1572, 7: 1550,
    -7: 932, 8: 825, -8: 2132, 9: 1154, -9: 1968, 10: 1880, -10: 1305,
    11: 1052, -11: 1230, 12: 2340, -12: 1428, 13: 2492, -13: 2673,
    14: 1412, -14: 1638, 15: 1185, -15: 1230, 16: 978, -16: 1605,
    17: 1154, -17: 1692, 18: 1757, -18: 2292, 19: 1230, -19: 2187,
    20: 2048, -20: 1372, 21: 1934, -21: 1890, 22: 1440, -22: 1034,
    23: 1964, -23: 1322, 24: 1428, -24: 2042, 25: 1734, -25: 1214,
    26: 1260, -26: 1230, 27: 1680, -27: 1154, 28: 1652, -28: 1808,
    29: 1112, -29: 1670, 30: 1820, -30: 1284, 31: 1614, -31: 1404,
    32: 1552, -32: 1808, 33: 1230, -33: 1914, 34: 1200, -34: 1832,
    35: 1480, -35: 1094, 36: 1572, -36: 1397, 37: 1622, -37: 1220,
    38: 1452, -38: 2064, 39: 1848, -39: 1440, 40: 1262, -40: 1397,
    41: 2384, -41: 1262, 42: 1536, -42: 2838, 43: 1542, -43: 1550,
    44: 2012, -44: 1683, 45: 1274, -45: 2544, 46: 1432, -46: 1368,
    47: 1710, -47: 2132, 48: 1392, -48: 1734, 49: 1790, -49: 1334,
    50: 2138, -50: 1364,
}


def _rec(add, rid, summary, domain, check, expected, bound=None, notes="", default_hi=None):
    add(ConjectureRecord(rid, summary, domain, check, expected, bound, notes, default_hi))


def _w2(n: int) -> int:
    return 1 + (n & 1)


def register(add) -> None:
    _c31_32(add)
    _c33_35(add)
    _c36_312(add)
    _c313_315(add)


def _c31_32(add) -> None:
    def c31i_a(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            if 2 * q > n:
                break
            p = n - w * q
            if p >= 2 and pf[p] and ctx.isp(q + 6):
                return (p, q)
        return None

    _rec(add, "C3.1.i.a", "n = p + (1+(n mod 2))q, q <= n/2, with p, q, q+6 prime",
         D(12), c31i_a, no_failures(), 10**9)

    def sexy_pair_rec(rid, d1, d2, dom, bound=None):
        def chk(ctx, n):
            w, pf = _w2(n), ctx.pf
            for q in ctx.primes:
                p = n - w * q
                if p <= q:
                    break
                if pf[p] and ctx.isp(p - d1) and ctx.isp(q + d2):
                    return (p, q)
            return None

        _rec(add, rid, f"n = p + (1+(n mod 2))q, p > q prime, p-({d1}) and "
             f"q+({d2}) prime", dom, chk, no_failures(), bound)

    def c31i_b(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(p - 6) and ctx.isp(q + 6):
                return (p, q)
        return None

    _rec(add, "C3.1.i.b", "n = p + (1+(n mod 2))q, p > q prime, p-6 and q+6 prime",
         D(1, extra=lambda n: n > 15727 or (n % 2 == 0 and n > 8012),
           description="even n > 8012, odd n > 15727"),
         c31i_b, no_failures(), 10**8)

    # the +-12,+-6 thresholds apply to the matched-sign pairs; the
    # mixed-sign variants still fail above 16349 (e.g. (12,-6) at 16361)
    for d1, d2, lo in ((-6, 6, 15722), (-6, -6, 15734), (6, -6, 15740),
                       (12, 6, 16350), (-12, -6, 16350)):
        sexy_pair_rec(f"C3.1.ii({d1},{d2})", d1, d2, D(lo))

    def c32i_a(ctx, n):
        w, pf = 1 + (-n) % 6, ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(p - 2) and ctx.isp(q + 2):
                return (p, q)
        return None

    _rec(add, "C3.2.i.a", "n = p + (1+(-n mod 6))q, p > q prime, p-2 and q+2 prime",
         D(62372, extra=lambda n: n % 6 != 2), c32i_a, no_failures(), 5 * 10**7,
         default_hi=70_000)

    def c32i_b(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            if 2 * q >= n:
                break
            p = n + q
            if ctx.isp(p) and ctx.isp(p - 2) and ctx.isp(q + 2):
                return (p, q)
        return None

    _rec(add, "C3.2.i.b", "n = p - q, q < n/2, with p, q, p-2, q+2 prime",
         D(6897, mod=(6, frozenset({2}))), c32i_b, no_failures(), 5 * 10**7)

    def c32ii_a(ctx, n):
        w, pf = 1 + n % 6, ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(p - 4) and ctx.isp(q + 4):
                return (p, q)
        return None

    _rec(add, "C3.2.ii.a", "n = p + (1+(n mod 6))q, p > q prime, p-4 and q+4 prime",
         D(66504, extra=lambda n: n % 6 != 4), c32ii_a, no_failures(), 5 * 10**7,
         default_hi=75_000)

    def c32ii_b(ctx, n):
        for q in ctx.primes:
            if 2 * q >= n:
                break
            p = n + q
            if ctx.isp(p) and ctx.isp(p - 4) and ctx.isp(q + 4):
                return (p, q)
        return None

    _rec(add, "C3.2.ii.b", "n = p - q, q < n/2, with p, q, p-4, q+4 prime",
         D(7223, mod=(6, frozenset({4}))), c32ii_b, no_failures(), 5 * 10**7)


def _c33_35(add) -> None:
    def c33i(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p]:
                d = 3 * (p - q)
                if ctx.isp(d - 1) and ctx.isp(d + 1):
                    return (p, q)
        return None

    _rec(add, "C3.3.i", "n = p + (1+(n mod 2))q, p > q prime, 3(p-q)+-1 twin primes",
         D(1, extra=lambda n: n > 4676 if n % 2 else n > 30986,
           description="odd n > 4676, even n > 30986"),
         c33i, no_failures(), 10**8, default_hi=40_000)

    def c33ii(ctx, n):
        w = _w2(n)
        for q in ctx.primes:
            if 2 * q >= n:
                break
            p = n + w * q
            if ctx.isp(p):
                s = 3 * (p + q)
                if ctx.isp(s - 1) and ctx.isp(s + 1):
                    return (p, q)
        return None

    _rec(add, "C3.3.ii", "n = p - (1+(n mod 2))q, q < n/2 prime, p prime, "
         "3(p+q)+-1 twin primes",
         D(1, extra=lambda n: n > 7658 if n % 2 else n > 41884,
           description="odd n > 7658, even n > 41884"),
         c33ii, no_failures(), default_hi=50_000)

    def c33iii_a(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            if 2 * q > n:
                break
            p = n - q
            if pf[p] and ctx.isp(p - q - 1):
                return (p, q)
        return None

    _rec(add, "C3.3.iii.a", "even n = p + q with p, q, p-q-1 prime",
         D(160, parity="even"), c33iii_a, no_failures())

    def c33iii_b(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            if 2 * q > n:
                break
            p = n - q
            if pf[p] and p - q + 1 >= 2 and ctx.isp(p - q + 1):
                return (p, q)
        return None

    _rec(add, "C3.3.iii.b", "even n = p + q with p, q, p-q+1 prime",
         D(280, parity="even"), c33iii_b, no_failures())

    for rid, delta, lo in (("C3.4.i.a", 6, 14492), ("C3.4.i.b", -6, 22094)):
        def c34(ctx, n, delta=delta):
            w, pf = _w2(n), ctx.pf
            for q in ctx.primes:
                p = n - w * q
                if p <= q:
                    break
                if pf[p] and ctx.isp(p * q + delta):
                    return (p, q)
            return None

        _rec(add, rid, f"n = p + (1+(n mod 2))q, p > q prime, pq{delta:+d} prime",
             D(lo), c34, no_failures(), 5 * 10**7,
             notes="general multiples-of-6 family stated without thresholds")

    def c35i(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(q - 6) and ctx.isp(q + 6):
                return (p, q)
        return None

    _rec(add, "C3.5.i", "n = p + (1+(n mod 2))q, p > q prime, q+-6 prime",
         D(6782), c35i, no_failures(), 2 * 10**7)

    def c35ii(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(6 * q - 1) and ctx.isp(6 * q + 1):
                return (p, q)
        return None

    _rec(add, "C3.5.ii", "n = p + (1+(n mod 2))q, p > q prime, 6q+-1 prime",
         D(1, extra=lambda n: n > 18680 if n % 2 else n >= 8070,
           description="even n >= 8070, odd n > 18680"),
         c35ii, no_failures(), 4 * 10**7, default_hi=25_000)

    def c35iii(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(2 * q - 3) and ctx.isp(2 * q + 3):
                return (p, q)
        return None

    _rec(add, "C3.5.iii", "n = p + (1+(n mod 2))q, p > q prime, 2q+-3 prime",
         D(4410), c35iii, no_failures())

    def c35iv(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(3 * q - 2) and ctx.isp(3 * q + 2):
                return (p, q)
        return None

    _rec(add, "C3.5.iv", "n = p + (1+(n mod 2))q, p > q prime, 3q+-2 prime",
         D(16140), c35iv, no_failures())


def _c36_312(add) -> None:
    def c36i(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p * p + q * q - 1):
                return (p, q)
        return None

    _rec(add, "C3.6.i", "n = p + (1+(n mod 2))q with p, q, p^2+q^2-1 prime",
         D(785), c36i, no_failures(), 14 * 10**7,
         notes="general odd-shift family stated without thresholds")

    def c37(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p * p + 3 * p * q + q * q):
                return (p, q)
        return None

    _rec(add, "C3.7", "n = p + (1+(n mod 2))q with p, q, p^2+3pq+q^2 prime",
         D(1), c37, exact(EXC_3_7), 3 * 10**8)

    for a, values in E_SETS.items():
        _rec(add, f"C3.8(a={a})",
             f"n = p + (1+(n mod 2))q with p, q, {2**a + 2}(p+q)^2+pq prime",
             D(1), (lambda a: lambda ctx, n: e_check(ctx, n, a))(a),
             exact(values), 10**7)
    for a, top in E_MAX.items():
        _rec(add, f"C3.8(a={a})",
             f"n = p + (1+(n mod 2))q with p, q, {2**a + 2}(p+q)^2+pq prime",
             D(1), (lambda a: lambda ctx, n: e_check(ctx, n, a))(a),
             exact_max(top), 10**7,
             notes="only the largest failure is published")

    def c39i_a(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            p = n - 2 * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p * p + 60 * q * q):
                return (p, q)
        return None

    _rec(add, "C3.9.i.a", "odd n = p + 2q with p, q, p^2+60q^2 prime",
         D(17, parity="odd"), c39i_a, no_failures(), 10**8)

    def c39i_b(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            p = n - 2 * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p**4 + 16 * q**4):
                return (p, q)
        return None

    _rec(add, "C3.9.i.b", "odd n = p + 2q with p, q, p^4+(2q)^4 prime",
         D(1425, parity="odd"), c39i_b, no_failures(), 10**8)

    _rec(add, "C3.9(a=3)", "odd n = p + 2q with p, q, p^2+28q^2 prime",
         D(1, parity="odd"), lambda ctx, n: estar_check(ctx, n, 3),
         exact(ESTAR_SET_3))
    for a, top in ESTAR_MAX.items():
        _rec(add, f"C3.9(a={a})",
             f"odd n = p + 2q with p, q, p^2+{4 * (2**a - 1)}q^2 prime",
             D(1, parity="odd"),
             (lambda a: lambda ctx, n: estar_check(ctx, n, a))(a),
             exact_max(top), notes="only the largest failure is published")

    def c310(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes:
            p = n - w * q
            if p <= q:
                break
            if pf[p] and ctx.isp(p**4 + q**4 - 1):
                return (p, q)
        return None

    _rec(add, "C3.10", "n = p + (1+(n mod 2))q, p > q prime, p^4+q^4-1 prime",
         D(7830), c310, no_failures())

    def c311(ctx, n):
        t, pf = 2 * n, ctx.pf
        c = t**4
        for q in ctx.primes:
            if 2 * q > t:
                break
            p = t - q
            if pf[p] and ctx.isp(c + (p * q) ** 2):
                return (p, q)
        return None

    _rec(add, "C3.11", "2n = p + q prime with (p+q)^4+(pq)^2 prime",
         D(9608), c311, no_failures(), 3 * 10**7)

    def c312(ctx, n):
        w, pf = _w2(n), ctx.pf
        for q in ctx.primes[1:]:
            p = n - w * q
            if p < 3:
                break
            if p != q and pf[p] and jacobi(p, q) == 1 and jacobi(q, p) == 1:
                return (p, q)
        return None

    _rec(add, "C3.12", "n = p + (1+(n mod 2))q, odd primes with (p/q) = (q/p) = 1",
         D(400), c312, exact({757, 1069, 1238}), 10**8)


def _c313_315(add) -> None:
    for m, s in S_TABLE.items():
        _rec(add, f"C3.13(m={m})",
             f"n = p + (1+(n mod 2))q, primes p > q > 2 with "
             f"(p-(1+(n mod 2))*{m}/q) = (q+{m}/p) = 1",
             D(1), (lambda m: lambda ctx, n: s_check(ctx, n, m))(m),
             exact_max(s - 1), notes=f"published threshold s({m}) = {s}")

    def c314(ctx, n):
        pf = ctx.pf
        if n % 2:
            for q in ctx.primes:
                if 2 * q > n:
                    break
                p = n - 2 * q
                if p >= 3 and pf[p] and jacobi(q, n) == 1:
                    return (p, q)
        else:
            for q in ctx.primes[1:]:  # (q+1)/2 needs odd q
                if 2 * q > n:
                    break
                p = n - q
                if p >= 3 and pf[p] and jacobi((q + 1) // 2, n + 1) == 1:
                    return (p, q)
        return None

    _rec(add, "C3.14", "n = p + (1+(n mod 2))q, p odd prime, prime q <= n/2, "
         "with (q/n) = 1 for odd n and ((q+1)/2 / n+1) = 1 for even n",
         D(6), c314, no_failures(), 10**9)

    def c315i_a(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        for q in ctx.primes:
            if q > n - 2:
                break
            p = n - q
            if p >= 2 and pf[p] and qf[p + 1] and qf[q - 1]:
                return (p, q)
        return None

    _rec(add, "C3.15.i.a", "even n = p + q, p, q prime, p+1 and q-1 practical",
         D(6, parity="even"), c315i_a, no_failures(), 2 * 10**8)

    def c315i_b(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        for q in ctx.primes:
            if q > n - 2:
                break
            p = n - q
            if (p >= 2 and pf[p] and qf[p + 1] and qf[q - 1]
                    and q - p - 1 >= 2 and ctx.isp(q - p - 1)):
                return (p, q)
        return None

    _rec(add, "C3.15.i.b", "even n = p + q, p, q prime, p+1, q-1 practical, "
         "q-p-1 prime", D(59328, parity="even"), c315i_b, no_failures(), 2 * 10**7)

    def c315ii(ctx, n):
        m = 2 * n - 1
        pf, qf = ctx.pf, ctx.qf
        for p in ctx.primes:
            q = m - p
            if q <= p:
                break
            if qf[q] and ctx.isp(q - p):
                return (p, q)
        return None

    _rec(add, "C3.15.ii", "2n-1 = p + q with p and q-p prime and q practical",
         D(9), c315ii, no_failures(), 10**7)
