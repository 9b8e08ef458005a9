"""Registry entries with mixed addend types: free integer splits with prime
polynomial conditions, k-searches, triangular/Fibonacci/power-of-two addends,
and sums built from the sets S (primes flanked by practicals) and T
(practicals flanked by twin primes)."""

from __future__ import annotations

from math import log, sqrt

from ..arith import jacobi
from .base import ConjectureRecord, Domain, exact, exact_max, no_failures
from .engine import f_check, gonal_check, sumset_cover

D = Domain

F_TABLE = {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 33, 8: 11, 9: 25, 10: 31,
           11: 49, 12: 37, 13: 73, 14: 147, 15: 49, 16: 49, 17: 153, 18: 1,
           19: 239, 20: 85}

GONAL_TABLE = {3: 1, 4: 1, 5: 1, 6: 1, 7: 14, 8: 1, 9: 1, 10: 38, 11: 1,
               12: 1, 13: 1, 14: 1, 15: 9, 16: 20, 17: 1, 18: 33, 19: 14,
               20: 1}

EXC_4_19_II = (1, 16, 76, 166, 316, 341, 361, 411, 481, 556, 656, 766, 866, 1456)


def _rec(add, rid, summary, domain, check, expected, bound=None, notes="", default_hi=None):
    add(ConjectureRecord(rid, summary, domain, check, expected, bound, notes, default_hi))


def register(add) -> None:
    _c41_43(add)
    _c44_46(add)
    _c47_48(add)
    _c49_410(add)
    _c411_412(add)
    _c413_416(add)
    _c417_418(add)
    _c419_422(add)
    _c423_425(add)
    _c426_430(add)


def _c41_43(add) -> None:
    def c41(ctx, n):
        pf = ctx.pf
        for y in ctx.triangulars:
            x = n - y
            if x < 1:
                break
            if pf[6 * x - 1] and pf[6 * x + 1]:
                return (x, y)
        return None

    _rec(add, "C4.1", "n = x + y with {6x-1,6x+1} twin primes and y triangular",
         D(48625), c41, exact({76106}), 10**9)

    for pair, lo, missing in (("AB", 2, ()), ("BC", 5, ()), ("AC", 5, (161,))):
        def chk(ctx, n, pair=pair):
            xs = {"A": ctx.pool_a, "B": ctx.pool_b, "C": ctx.pool_c}
            xset, yset = xs[pair[0]], xs[pair[1]]
            yflags = ctx.__dict__.setdefault("_pool_flags", {})
            if pair[1] not in yflags:
                fl = bytearray(ctx.bound + 1)
                for v in yset:
                    fl[v] = 1
                yflags[pair[1]] = fl
            fl = yflags[pair[1]]
            for x in xset:
                if x >= n:
                    break
                if fl[n - x]:
                    return (x, n - x)
            return None

        add(ConjectureRecord(
            f"C4.2.{pair}",
            f"n = x + y with x in pool {pair[0]} and y in pool {pair[1]} "
            "(A: 6x+-1 twin primes; B: 6x+1, 6x+5 prime; C: 2x+-3 prime)",
            D(lo), chk, exact(missing) if missing else no_failures(),
            3 * 10**8, bound_multiplier=7))

    def c43i(ctx, n):
        pf = ctx.pf
        for q in range(1, n - 1):
            p = n - q
            if p < 2:
                break
            if pf[p] and ctx.isp(p + 6) and pf[6 * q - 1] and pf[6 * q + 1]:
                return (p, q)
        return None

    _rec(add, "C4.3.i", "n = p + q with p, p+6, 6q-1, 6q+1 all prime",
         D(12), c43i, no_failures(), 10**9)

    def c43ii(ctx, n):
        pf = ctx.pf
        r = n & 1
        for q in range(1, n - 1):
            p = n - q
            if p < 2:
                break
            if (pf[p] and ctx.isp(p + 6) and ctx.isp(3 * q - 2 + r)
                    and ctx.isp(3 * q + 2 - r)):
                return (p, q)
        return None

    _rec(add, "C4.3.ii", "n = p + q with p, p+6, 3q-2+(n mod 2), 3q+2-(n mod 2) "
         "all prime", D(7), c43ii, exact({319}))

    def c43iii(ctx, n):
        for x in range(1, n):
            y = n - x
            if (ctx.isp(3 * x - 2) and ctx.isp(3 * x + 2)
                    and ctx.isp(6 * y - 1) and ctx.isp(6 * y + 1)):
                return (x, y)
        return None

    _rec(add, "C4.3.iii", "n = x + y with 3x+-2 and 6y+-1 all prime",
         D(4), c43iii, exact({11, 64, 86, 629}))


def _c44_46(add) -> None:
    def c44i_a(ctx, n):
        pf = ctx.pf
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(2 * p * q + 1):
                return (p, q)
        return None

    _rec(add, "C4.4.i.a", "n = p + q, q >= 1, with p and 2pq+1 prime",
         D(8), c44i_a, no_failures(), 10**9)

    for m, lo in ((1, 624), (2, 29), (3, 152), (4, 358), (5, 200), (6, 308),
                  (7, 358), (8, 279), (9, 698), (10, 264)):
        def c44i(ctx, n, m=m):
            for x in range(m + 2, n):
                y = n - x
                if (ctx.isp(x - m) and ctx.isp(x + m) and ctx.isp(2 * x * y + 1)):
                    return (x, y)
            return None

        _rec(add, f"C4.4.i(m={m})", f"n = x + y with x-{m}, x+{m}, 2xy+1 all prime",
             D(lo), c44i, no_failures(),
             notes="threshold from the published sufficiency list")

    def c44ii_a(ctx, n):
        for x in range(1, n):
            y = n - x
            v = 2 * x * y
            if ctx.isp(v - 1) and ctx.isp(v + 1):
                return (x, y)
        return None

    _rec(add, "C4.4.ii.a", "n = x + y with 2xy+-1 twin primes",
         D(358), c44ii_a, no_failures(), 2 * 10**8)

    for m, lo in ((3, 5091), (5, 223), (7, 1786), (9, 549), (11, 604)):
        def c44ii(ctx, n, m=m):
            for x in range(1, n):
                y = n - x
                v = 2 * x * y
                if ctx.isp(v - m) and ctx.isp(v + m):
                    return (x, y)
            return None

        _rec(add, f"C4.4.ii(m={m})", f"n = x + y with 2xy-{m} and 2xy+{m} prime",
             D(lo), c44ii, no_failures())

    c45_exc = {0: exact({1, 3, 85}),
               1: exact({1, 2, 3, 4, 40, 125, 155, 180, 470, 1275, 2185, 3875}),
               2: exact({13})}
    for m, dom in ((0, D(1, parity="odd")), (1, D(1)), (2, D(8, parity="odd"))):
        def c45i(ctx, n, m=m):
            for x in range(m + 1, n):
                y = n - x
                v = x * y - 1
                if v < 2:
                    continue
                if m == 0:
                    if ctx.isp(x) and ctx.isp(v):
                        return (x, y)
                elif (ctx.isp(x - m) and ctx.isp(x + m) and ctx.isp(v)):
                    return (x, y)
            return None

        _rec(add, f"C4.5.i(m={m})",
             f"n = x + y with x-{m}, x+{m}, xy-1 all prime (m or n odd)",
             dom, c45i, c45_exc[m])

    def c45ii_a(ctx, n):
        for x in range(1, n):
            y = n - x
            v = x * y
            if ctx.isp(v - 1) and ctx.isp(v + 1):
                return (x, y)
        return None

    _rec(add, "C4.5.ii.a", "n = x + y with xy+-1 twin primes",
         D(3121), c45ii_a, no_failures(), 2 * 10**8)

    for m, dom in ((2, D(696, parity="even")), (3, D(1037)),
                   (4, D(4682, parity="even")), (5, D(2779))):
        def c45ii(ctx, n, m=m):
            for x in range(1, n):
                y = n - x
                v = x * y
                if v - m >= 2 and ctx.isp(v - m) and ctx.isp(v + m):
                    return (x, y)
            return None

        _rec(add, f"C4.5.ii(m={m})", f"n = x + y with xy-{m} and xy+{m} prime "
             "((m-1)n even)", dom, c45ii, no_failures())

    def c46_1(ctx, n):
        for x in range(1, n):
            y = n - x
            v = x * y
            if v - n >= 2 and ctx.isp(v + n) and ctx.isp(v - n):
                return (x, y)
        return None

    _rec(add, "C4.6(m=1)", "n = x + y with xy+n and xy-n both prime",
         D(7), c46_1, exact({24}))

    def c46_2(ctx, n):
        for x in range(1, n):
            y = n - x
            v = x * y
            if v - 2 * n >= 2 and ctx.isp(v + 2 * n) and ctx.isp(v - 2 * n):
                return (x, y)
        return None

    _rec(add, "C4.6(m=2)", "even n = x + y with xy+2n and xy-2n both prime",
         D(12, parity="even"), c46_2, no_failures())


def _c47_48(add) -> None:
    def c47i_a(ctx, n):
        for x in range(1, n):
            y = n - x
            if ctx.isp(x * x + x * y + y * y):
                return (x, y)
        return None

    _rec(add, "C4.7.i.a", "n = x + y with x^2+xy+y^2 prime",
         D(2), c47i_a, exact({8}))

    def c47i_b(ctx, n):
        for x in range(1, n):
            y = n - x
            if ctx.isp(x * x + 3 * x * y + y * y):
                return (x, y)
        return None

    _rec(add, "C4.7.i.b", "n = x + y with x^2+3xy+y^2 prime",
         D(2), c47i_b, no_failures())

    def c47ii(ctx, n):
        nn = n * n
        for x in range(1, n):
            y = n - x
            v = x * y
            if ctx.isp(nn - v) and ctx.isp(nn + v):
                return (x, y)
        return None

    _rec(add, "C4.7.ii", "n = x + y with n^2-xy and n^2+xy both prime",
         D(1), c47ii, exact({1, 8, 10, 18, 20, 41, 46, 58, 78, 116, 440}))

    def c47iii(ctx, n):
        n4 = n**4
        for x in range(1, n):
            y = n - x
            v = x * y
            if ctx.isp(n4 - v) and ctx.isp(n4 + v):
                return (x, y)
        return None

    _rec(add, "C4.7.iii(a=4,m=1)", "n = x + y with n^4-xy and n^4+xy both prime",
         D(4687), c47iii, no_failures(),
         notes="general odd-m family instantiated at the stated case")

    for a, dom, expected in ((1, D(1), exact({1, 6, 16, 24})),
                             (2, D(23), no_failures()),
                             (3, D(387), no_failures()),
                             (4, D(749), no_failures())):
        e = 1 << a

        def c48i(ctx, n, e=e):
            for x in range(1, n):
                y = n - x
                if ctx.isp((x * y) ** e + 1):
                    return (x, y)
            return None

        _rec(add, f"C4.8.i(a={a})", f"n = x + y with (xy)^{e}+1 prime",
             dom, c48i, expected)

    for p_, dom in ((3, D(2)), (5, D(29)), (7, D(47)), (11, D(179)), (13, D(109))):
        def c48ii(ctx, n, p_=p_):
            for x in range(1, n):
                y = n - x
                v = x * y
                if ctx.isp(sum(v**i for i in range(p_))):
                    return (x, y)
            return None

        summary = ("n = x + y with (xy)^2+xy+1 prime" if p_ == 3 else
                   f"n = x + y with ((xy)^{p_}-1)/(xy-1) prime")
        _rec(add, f"C4.8.ii(p={p_})", summary, dom, c48ii, no_failures())


def _c49_410(add) -> None:
    def c49i(ctx, n):
        pf = ctx.pf
        for p in ctx.primes[3:]:
            q = n - p
            if q < 1:
                break
            if (ctx.isp(p - 6) and ctx.isp(p + 6) and ctx.isp(2 * p * q + 1)):
                return (p, q)
        return None

    _rec(add, "C4.9.i", "n = p + q, q >= 1, with p, p-6, p+6, 2pq+1 all prime",
         D(15000), c49i, exact({33142, 37723, 55762}),
         notes="general divisible-by-6 family stated without more thresholds")

    for rid, conds, lo in (
        ("C4.9.ii", lambda ctx, p: ctx.isp(6 * p - 1) and ctx.isp(6 * p + 1), 73179),
        ("C4.9.iii", lambda ctx, p: ctx.isp(2 * p - 3) and ctx.isp(2 * p + 3), 90983),
        ("C4.9.iv", lambda ctx, p: ctx.isp(3 * p - 2) and ctx.isp(3 * p + 2), 92618),
    ):
        def c49(ctx, n, conds=conds):
            for p in ctx.primes:
                q = n - p
                if q < 1:
                    break
                if conds(ctx, p) and ctx.isp(2 * p * q + 1):
                    return (p, q)
            return None

        _rec(add, rid, "n = p + q, q >= 1, with p prime, linear pair at p prime, "
             "and 2pq+1 prime", D(lo), c49, no_failures())

    def c410i_a(ctx, n):
        nn = n * n
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(p + 6) and ctx.isp(nn + p * q):
                return (p, q)
        return None

    _rec(add, "C4.10.i.a", "n = p + q, q >= 1, with p, p+6, n^2+pq prime",
         D(11), c410i_a, no_failures())

    def c410i_b(ctx, n):
        nn = n * n
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(nn - p * q):
                return (p, q)
        return None

    _rec(add, "C4.10.i.b", "n = p + q, q >= 1, with p and n^2-pq prime",
         D(3), c410i_b, exact({8, 37}))

    def c410i_c(ctx, n):
        nn = n * n
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(nn - p * q) and ctx.isp(nn + p * q):
                return (p, q)
        return None

    _rec(add, "C4.10.i.c", "n = p + q, q >= 1, with p, n^2-pq, n^2+pq prime",
         D(601), c410i_c, exact({772, 1177, 1621, 2162}))

    def c410ii(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            v = p * q
            if v - n >= 2 and ctx.isp(v - n) and ctx.isp(v + n):
                return (p, q)
        return None

    _rec(add, "C4.10.ii", "n = p + q, q >= 1, with p, pq-n, pq+n prime",
         D(2573), c410ii, exact({6892}))

    def c410iii_a(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            v = p * q
            if ctx.isp(v * v + v + 1):
                return (p, q)
        return None

    _rec(add, "C4.10.iii.a", "n = p + q, q >= 1, with p and (pq)^2+pq+1 prime",
         D(1), c410iii_a, exact({1, 2, 13, 16, 46, 95, 157}))

    def c410iii_b(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(4 * (p * q) ** 2 + 1):
                return (p, q)
        return None

    _rec(add, "C4.10.iii.b", "n = p + q, q >= 1, with p and (2pq)^2+1 prime "
         "(5 not dividing n)", D(3, extra=lambda n: n % 5 != 0),
         c410iii_b, exact({64}))

    def c410iv(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(16 * (p * q) ** 4 + 1):
                return (p, q)
        return None

    _rec(add, "C4.10.iv", "n = p + q, q >= 1, with p and (2pq)^4+1 prime",
         D(1), c410iv, exact({1, 2, 5, 10, 34, 68}))


def _c411_412(add) -> None:
    def c411(ctx, n):
        x = 1
        while x * x < n:
            y = n - x * x
            if ctx.isp(2 * x * y - 1):
                return (x, y)
            x += 1
        return None

    _rec(add, "C4.11.i", "n = x^2 + y (x, y >= 1) with 2xy-1 prime",
         D(3), c411, no_failures(), 3 * 10**9,
         notes="general (m, r) family stated without thresholds")

    variants = [
        ("C4.12.i.a", D(4), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x - 1) and ctx.isp(3 * x + 1)
         and ctx.isp(x * y - 1), "3x+-1 and xy-1 prime"),
        ("C4.12.i.b", D(3), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x - 1) and ctx.isp(3 * x + 1)
         and ctx.isp(3 * x * y - 1), "3x+-1 and 3xy-1 prime"),
        ("C4.12.i.c", D(3), exact({63}),
         lambda ctx, x, y: ctx.isp(2 * x - 1) and ctx.isp(2 * x + 1)
         and ctx.isp(2 * x * y + 1), "2x+-1 and 2xy+1 prime"),
        ("C4.12.ii.a", D(8), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x - 2) and ctx.isp(3 * x + 2)
         and ctx.isp(2 * x * y + 1), "3x+-2 and 2xy+1 prime"),
        ("C4.12.ii.b", D(8), exact({17}),
         lambda ctx, x, y: ctx.isp(2 * x - 3) and ctx.isp(2 * x + 3)
         and ctx.isp(2 * x * y + 1), "2x+-3 and 2xy+1 prime"),
        ("C4.12.iii.a", D(3), exact({28}),
         lambda ctx, x, y: ctx.isp(2 * x + 1) and ctx.isp(2 * y - 1)
         and ctx.isp(2 * x * y + 1), "2x+1, 2y-1, 2xy+1 prime"),
        ("C4.12.iii.b", D(3), exact({9, 96}),
         lambda ctx, x, y: ctx.isp(2 * x + 1) and ctx.isp(2 * y - 1)
         and ctx.isp(2 * x * y - 1), "2x+1, 2y-1, 2xy-1 prime"),
    ]
    for rid, dom, expected, cond, desc in variants:
        def chk(ctx, n, cond=cond):
            for x in range(1, n):
                if cond(ctx, x, n - x):
                    return (x, n - x)
            return None

        _rec(add, rid, f"n = x + y with {desc}", dom, chk, expected,
             10**9 if rid == "C4.12.i.a" else 10**8)


def _c413_416(add) -> None:
    variants = [
        ("C4.13.i.a", D(3, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x - 1) and ctx.isp(3 * x + 1)
         and ctx.isp(x * x + y * y), "3x+-1 and x^2+y^2 prime"),
        ("C4.13.i.b", D(5, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x - 2) and ctx.isp(3 * x + 2)
         and ctx.isp(x * x + y * y), "3x+-2 and x^2+y^2 prime"),
        ("C4.13.ii.a", D(11, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(x - 3) and ctx.isp(x + 3)
         and ctx.isp(x * x + y * y), "x+-3 and x^2+y^2 prime"),
        ("C4.13.ii.b", D(5, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(2 * x - 3) and ctx.isp(2 * x + 3)
         and ctx.isp(x * x + y * y), "2x+-3 and x^2+y^2 prime"),
        ("C4.13.ii.c", D(15, parity="odd"), exact({47, 209, 239, 253}),
         lambda ctx, x, y: ctx.isp(x) and ctx.isp(x - 6) and ctx.isp(x + 6)
         and ctx.isp(x * x + y * y), "x, x+-6 and x^2+y^2 prime"),
    ]
    for rid, dom, expected, cond, desc in variants:
        def chk(ctx, n, cond=cond):
            for x in range(1, n):
                if cond(ctx, x, n - x):
                    return (x, n - x)
            return None

        _rec(add, rid, f"odd n = x + y with {desc}", dom, chk, expected, 10**8)

    def c413iii(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(2 * p + 1) and ctx.isp((p - 1) ** 2 + q * q):
                return (p, q)
        return None

    _rec(add, "C4.13.iii", "even n = p + q, q >= 1, with p, 2p+1, (p-1)^2+q^2 prime",
         D(4, parity="even"), c413iii, no_failures(), 10**8)

    def c413iv_a(ctx, n):
        shift = 3 * ((n - 1) & 1)
        for x in range(1, n):
            y = n - x
            if ctx.isp(2 * x * y + 1) and ctx.isp(x * x + y * y - shift):
                return (x, y)
        return None

    _rec(add, "C4.13.iv.a", "n = x + y with 2xy+1 and x^2+y^2-3((n-1) mod 2) prime",
         D(3), c413iv_a, no_failures(), 10**8)

    def c413iv_b(ctx, n):
        shift = 3 * ((n - 1) & 1)
        mod = n + shift
        for x in range(1, (n + 1) // 2):
            y = n - x
            if ctx.isp(x * x + y * y - shift) and jacobi(x, mod) == 1:
                return (x, y)
        return None

    _rec(add, "C4.13.iv.b", "n = x + y, x < n/2, with x^2+y^2-3((n-1) mod 2) "
         "prime and (x / n+3((n-1) mod 2)) = 1", D(3), c413iv_b, no_failures(),
         10**8)

    def c414i(ctx, n):
        for x in range(n + 1):
            y = n - x
            if ctx.isp(x**3 + 2 * y**3):
                return (x, y)
        return None

    _rec(add, "C4.14.i", "n = x + y (x, y >= 0) with x^3+2y^3 prime",
         D(1), c414i, no_failures(), 10**9,
         notes="general odd-exponent family instantiated at the stated case")

    variants3 = [
        ("C4.14.ii.a", D(1196, parity="even"), no_failures(),
         lambda ctx, x, y: ctx.isp(x**3 + 2 * y**3) and ctx.isp(2 * x**3 + y**3),
         "x^3+2y^3 and 2x^3+y^3 prime"),
        ("C4.14.iii.a", D(528), no_failures(),
         lambda ctx, x, y: ctx.isp(2 * x + 1) and ctx.isp(2 * y - 1)
         and ctx.isp(x**3 + 2 * y**3), "2x+1, 2y-1, x^3+2y^3 prime"),
        ("C4.14.iii.b", D(1545), no_failures(),
         lambda ctx, x, y: ctx.isp(2 * x - 1) and ctx.isp(2 * y + 1)
         and ctx.isp(x**3 + 2 * y**3), "2x-1, 2y+1, x^3+2y^3 prime"),
        ("C4.14.iv.a", D(393), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * x + 2) and ctx.isp(3 * x + 4)
         and ctx.isp(x**3 + 2 * y**3), "3x+2, 3x+4, x^3+2y^3 prime"),
        ("C4.14.iv.b", D(1738), no_failures(),
         lambda ctx, x, y: ctx.isp(6 * x + 1) and ctx.isp(6 * x + 5)
         and ctx.isp(x**3 + 2 * y**3), "6x+1, 6x+5, x^3+2y^3 prime"),
        ("C4.14.v.b", D(2, extra=lambda n: n not in (49, 53, 567)), no_failures(),
         lambda ctx, x, y: ctx.isp(2 * x * y + 1) and ctx.isp(x**3 + 2 * y**3),
         "2xy+1 and x^3+2y^3 prime"),
    ]
    for rid, dom, expected, cond, desc in variants3:
        def chk(ctx, n, cond=cond):
            for x in range(1, n):
                if cond(ctx, x, n - x):
                    return (x, n - x)
            return None

        _rec(add, rid, f"n = x + y with {desc}", dom, chk, expected)

    def c414v_a(ctx, n):
        pf = ctx.pf
        for p in ctx.primes:
            q = n - 2 * p
            if q < 2:
                break
            if pf[q] and ctx.isp(p**3 + 2 * ((q - 1) // 2) ** 3):
                return (p, q)
        return None

    _rec(add, "C4.14.v.a", "odd n = 2p + q with p, q, p^3+2((q-1)/2)^3 prime",
         D(2061, parity="odd"), c414v_a, no_failures())

    variants4 = [
        ("C4.15.i.a", D(3, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(x**4 + y * y), "x^4+y^2 prime"),
        ("C4.15.i.b", D(1623, parity="odd"), no_failures(),
         lambda ctx, x, y: ctx.isp(x**4 + y * y) and ctx.isp(x * x + y**4),
         "x^4+y^2 and x^2+y^4 prime"),
        ("C4.15.iii.a", D(3663), no_failures(),
         lambda ctx, x, y: ctx.isp(3 * (x * y) ** 3 - 1)
         and ctx.isp(3 * (x * y) ** 3 + 1), "3(xy)^3+-1 both prime"),
        ("C4.15.iii.b", D(7426), no_failures(),
         lambda ctx, x, y: ctx.isp(2 * (x * y) ** 4 - 1)
         and ctx.isp(2 * (x * y) ** 4 + 1), "2(xy)^4+-1 both prime"),
        ("C4.15.iii.c", D(23), no_failures(),
         lambda ctx, x, y: ctx.isp((x * y) ** 4 + 1), "(xy)^4+1 prime"),
    ]
    for rid, dom, expected, cond, desc in variants4:
        def chk(ctx, n, cond=cond):
            for x in range(1, n):
                if cond(ctx, x, n - x):
                    return (x, n - x)
            return None

        _rec(add, rid, f"n = x + y with {desc}", dom, chk, expected)

    def c415ii_a(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            p = n - 2 * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p**4 + 4 * q * q):
                return (p, q)
        return None

    _rec(add, "C4.15.ii.a", "odd n = p + 2q with p, q, p^4+(2q)^2 prime",
         D(15051, parity="odd"), c415ii_a, no_failures())

    def c415ii_b(ctx, n):
        pf = ctx.pf
        for q in ctx.primes:
            p = n - 2 * q
            if p < 2:
                break
            if pf[p] and ctx.isp(p * p + 16 * q**4):
                return (p, q)
        return None

    _rec(add, "C4.15.ii.b", "odd n = p + 2q with p, q, p^2+(2q)^4 prime",
         D(16261, parity="odd"), c415ii_b, no_failures())

    def c416i_a(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(p + 6) and ctx.isp(p * p + 3 * q * q):
                return (p, q)
        return None

    _rec(add, "C4.16.i.a", "odd n = p + q, q >= 1, with p, p+6, p^2+3q^2 prime",
         D(7, parity="odd"), c416i_a, no_failures())

    def c416i_b(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(p + 2) and ctx.isp(p * p + 3 * q * q):
                return (p, q)
        return None

    _rec(add, "C4.16.i.b", "odd n = p + q, q >= 1, with p, p+2, p^2+3q^2 prime",
         D(37, parity="odd"), c416i_b, no_failures())

    def c416i_c(ctx, n):
        shift = (n - 1) & 1
        for x in range(1, n):
            y = n - x
            if ctx.isp(3 * x * y - 1) and ctx.isp(x * x + 3 * y * y + shift):
                return (x, y)
        return None

    _rec(add, "C4.16.i.c", "n = x + y with 3xy-1 and x^2+3y^2+((n-1) mod 2) prime",
         D(2), c416i_c, exact({8, 22, 78}))

    def c416ii(ctx, n):
        for x in range(1, n):
            y = n - x
            if (ctx.isp(6 * x - 1) and ctx.isp(6 * x + 1)
                    and ctx.isp(x**4 + 3 * y**4)):
                return (x, y)
        return None

    _rec(add, "C4.16.ii", "odd n = x + y with 6x+-1 and x^4+3y^4 prime",
         D(3, parity="odd"), c416ii, exact({47}))

    def c416iii(ctx, n):
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if ctx.isp(p**6 + 3 * q**6):
                return (p, q)
        return None

    _rec(add, "C4.16.iii", "odd n = p + q, q >= 1, with p and p^6+3q^6 prime",
         D(3, parity="odd"), c416iii, exact({13, 21}))


def _c417_418(add) -> None:
    for m, f in F_TABLE.items():
        expected = no_failures() if f == 1 else exact_max(f - 2)
        _rec(add, f"C4.17(m={m})",
             f"odd n = x + y (x, y >= 0) with x^{m}+3y^{m} prime",
             D(1, parity="odd"),
             (lambda m: lambda ctx, n: f_check(ctx, n, m))(m),
             expected, notes=f"published least odd threshold f({m}) = {f}",
             default_hi=10_000)

    def c418i(ctx, n):
        for x in range(1, n):
            y = n - x
            v = 3 * x * y
            if ctx.isp(v - 1) and ctx.isp(2 * v - 1):
                return (x, y)
        return None

    _rec(add, "C4.18.i", "n = x + y with p = 3xy-1 and 2p-1 both prime",
         D(211), c418i, no_failures(), 27 * 10**6)

    def c418ii(ctx, n):
        for x in range(1, n):
            y = n - x
            if ctx.isp(2 * x * y + 1) and ctx.isp(x * x + y):
                return (x, y)
        return None

    _rec(add, "C4.18.ii", "odd n = x + y with 2xy+1 and x^2+y prime",
         D(3, parity="odd"), c418ii, exact({43}))

    for m, lo in ((1, 3), (2, 177), (3, 467), (4, 789), (5, 1059), (6, 441)):
        def c418iii(ctx, n, m=m):
            for x in range(1, n):
                y = n - x
                if ctx.isp((x * y) ** m + 3):
                    return (x, y)
            return None

        _rec(add, f"C4.18.iii(m={m})", f"n = x + y with (xy)^{m}+3 prime",
             D(lo), c418iii, no_failures())


def _c419_422(add) -> None:
    def c419i_a(ctx, n):
        for k in range(n + 1):
            if ctx.isp(n + k) and ctx.isp(n + k * k):
                return k
        return None

    _rec(add, "C4.19.i.a", "k in [0,n] with n+k and n+k^2 both prime",
         D(1), c419i_a, no_failures(), 10**9)

    def c419i_b(ctx, n):
        top = sqrt(n) * log(n)
        k = 1
        while k < top:
            if ctx.isp(n + k) and ctx.isp(n + k * k):
                return k
            k += 1
        return None

    _rec(add, "C4.19.i.b", "0 < k < sqrt(n)*log(n) with n+k and n+k^2 prime",
         D(972), c419i_b, no_failures(), 10**9)

    def c419i_c(ctx, n):
        k = 1
        while k * k <= n:
            if ctx.isp(n + k * k):
                return k
            k += 1
        return None

    _rec(add, "C4.19.i.c", "k <= sqrt(n) with n+k^2 prime",
         D(43182), c419i_c, no_failures(), 10**9)

    def c419ii(ctx, n):
        for k in range(n):
            if ctx.isp(n - k) and ctx.isp(n + k) and ctx.isp(n + k * k):
                return k
        return None

    _rec(add, "C4.19.ii", "k in [0,n-1] with n-k, n+k, n+k^2 all prime",
         D(1), c419ii, exact(EXC_4_19_II), 10**9)

    def c419iii_a(ctx, n):
        for k in range(n):
            if ctx.isp(n + k) and ctx.isp(k * k + (n - k) ** 2):
                return k
        return None

    _rec(add, "C4.19.iii.a", "k in [0,n-1] with n+k and k^2+(n-k)^2 prime",
         D(3, parity="odd"), c419iii_a, no_failures(), 10**9)

    def c419iii_b(ctx, n):
        for k in range(n):
            if ctx.isp(n + k * k) and ctx.isp(k * k + (n - k) ** 2):
                return k
        return None

    _rec(add, "C4.19.iii.b", "k in [0,n-1] with n+k^2 and k^2+(n-k)^2 prime",
         D(7, parity="odd"), c419iii_b, no_failures(), 10**9)

    def c419iii_c(ctx, n):
        nn = n * n
        for k in range(n):
            if ctx.isp(n + k * k) and ctx.isp(k + nn):
                return k
        return None

    _rec(add, "C4.19.iii.c", "k in [0,n-1] with n+k^2 and k+n^2 prime",
         D(147), c419iii_c, no_failures(), 10**9)

    def c419iv_a(ctx, n):
        for k in range(n):
            if ctx.isp(n + k) and ctx.isp(2 * k * (n - k) + 1):
                return k
        return None

    _rec(add, "C4.19.iv.a", "k in [0,n-1] with n+k and 2k(n-k)+1 prime",
         D(2), c419iv_a, no_failures(), 10**9)

    def c419iv_b(ctx, n):
        for k in range(n):
            if ctx.isp(n + k * k) and ctx.isp(2 * k * (n - k) + 1):
                return k
        return None

    _rec(add, "C4.19.iv.b", "k in [0,n-1] with n+k^2 and 2k(n-k)+1 prime",
         D(183), c419iv_b, no_failures(), 10**9)

    for m, lo in GONAL_TABLE.items():
        _rec(add, f"C4.20(m={m})",
             f"k in [0,n-1] with n + ({m}-2)k(k-1)/2 + k prime",
             D(lo + 1), (lambda m: lambda ctx, n: gonal_check(ctx, n, m))(m),
             no_failures(), notes="threshold from the published sufficiency list")

    def c421i_a(ctx, n):
        for k in range(1, n + 1):
            if ctx.isp(n + k) and ctx.isp(k * n + 1):
                return k
        return None

    _rec(add, "C4.21.i.a", "k in [1,n] with n+k and kn+1 both prime",
         D(1), c421i_a, no_failures())

    def c421i_b(ctx, n):
        for k in range(1, n):
            v = k * n - 1
            if ctx.isp(v) and ctx.isp(2 * v + 1):
                return k
        return None

    _rec(add, "C4.21.i.b", "0 < k < n with kn-1 a Sophie Germain prime",
         D(102), c421i_b, no_failures())

    def c421ii_a(ctx, n):
        for k in range(1, n + 1):
            p = k * n + 1
            if ctx.isp(p) and jacobi(n, p) == 1:
                return k
        return None

    _rec(add, "C4.21.ii.a", "k in [1,n] with p = kn+1 prime and (n/p) = 1",
         D(4), c421ii_a, no_failures())

    def c421ii_b(ctx, n):
        for k in range(1, n + 1):
            if ctx.isp(k * (n - k) - 1) and ctx.isp(k * n + 1):
                return k
        return None

    _rec(add, "C4.21.ii.b", "k in [1,n] with k(n-k)-1 and kn+1 both prime",
         D(4), c421ii_b, no_failures())

    def c421iii(ctx, n):
        for k in range(1, n + 1):
            if ctx.isp(3 * k - 1) and ctx.isp(3 * k + 1) and ctx.isp(k * n + 1):
                return k
        return None

    _rec(add, "C4.21.iii", "k in [1,n] with 3k+-1 and kn+1 all prime",
         D(2), c421iii, no_failures())

    def c421iv(ctx, n):
        for k in range(1, n + 1):
            if ctx.isp(k * n + 1) and ctx.isp(k * k + (n - k) ** 2):
                return k
        return None

    _rec(add, "C4.21.iv", "k in [1,n] with kn+1 and k^2+(n-k)^2 both prime",
         D(3, parity="odd"), c421iv, no_failures())

    for m, dom, expected in ((3, D(9), exact({34})),
                             (1, D(4), exact({5, 8, 14, 53, 82}))):
        def c421v(ctx, n, m=m):
            for k in range(m + 2, n + 1):
                if ctx.isp(k - m) and ctx.isp(k + m) and ctx.isp(k * n + 1):
                    return k
            return None

        _rec(add, f"C4.21.v(m={m})", f"k in [1,n] with k-{m}, k+{m}, kn+1 all prime",
             dom, c421v, expected)

    def c422i_a(ctx, n):
        top = sqrt(n) * log(n)
        k = 1
        while k < top:
            if ctx.isp(k * n - 1) and ctx.isp(k * n + 1):
                return k
            k += 1
        return None

    _rec(add, "C4.22.i.a", "0 < k < sqrt(n)*log(n) with kn-1 and kn+1 prime",
         D(17262), c422i_a, no_failures(), 3 * 10**7)

    def c422i_b(ctx, n):
        for k in range(1, n):
            if ctx.isp(k * n - 1) and ctx.isp(k * n + 1):
                return k
        return None

    _rec(add, "C4.22.i.b", "0 < k < n with kn-1 and kn+1 both prime",
         D(128), c422i_b, no_failures(), 3 * 10**7)

    def c422ii(ctx, n):
        for k in range(n):
            if (ctx.isp(2 * k + 3) and ctx.isp(n * (n - k) - 1)
                    and ctx.isp(n * (n + k) - 1)):
                return k
        return None

    _rec(add, "C4.22.ii", "k in [0,n-1] with 2k+3, n(n-k)-1, n(n+k)-1 all prime",
         D(2), c422ii, no_failures(), 3 * 10**7)


def _c423_425(add) -> None:
    def c423i_a(ctx, n):
        qf = ctx.qf
        for y in ctx.triangulars:
            x = n - y
            if x < 1:
                break
            if qf[x]:
                return (x, y)
        return None

    _rec(add, "C4.23.i.a", "n = practical + triangular",
         D(1), c423i_a, no_failures(), 10**8)

    def c423i_b(ctx, n):
        ctx.coverage_guard(2 * n)
        qf = ctx.qf
        tri = ctx.triangular_set
        for m in range(n, 2 * n):
            if qf[m] and (m - n) in tri:
                return m
        return None

    _rec(add, "C4.23.i.b", "practical m in [n,2n) with m-n triangular",
         D(1), c423i_b, no_failures(), 42 * 10**5)

    def c423ii(ctx, n):
        for y in ctx.triangulars:
            p = n - y
            if p < 2:
                break
            if ctx.isp(p) and ctx.isp(2 * p + 1):
                return (p, y)
        return None

    _rec(add, "C4.23.ii", "odd n = Sophie Germain prime + triangular",
         D(3, parity="odd"), c423ii, no_failures(), 10**8,
         notes="published erratum: the printed claim already fails at n = 7 "
         "(no Sophie Germain prime among 7, 6, 4, 1)")

    def c423iii_a(ctx, n):
        qf = ctx.qf
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if qf[q] and ctx.isp(p**4 + q**4):
                return (p, q)
        return None

    _rec(add, "C4.23.iii.a", "odd n = p + q, p prime, q practical, p^4+q^4 prime",
         D(3, parity="odd"), c423iii_a, no_failures(), 10**8)

    def c423iii_b(ctx, n):
        qf = ctx.qf
        for p in ctx.primes:
            q = n - p
            if q < 1:
                break
            if qf[q] and ctx.isp(p * p + q * q):
                return (p, q)
        return None

    _rec(add, "C4.23.iii.b", "odd n = p + q, p prime, q practical, p^2+q^2 prime",
         D(3, parity="odd"), c423iii_b, no_failures(), 10**8)

    def c424i(ctx, n):
        for low in ctx.twin_lower_practical:
            x = low + 1  # practical centre of the second-kind sandwich {x-1,x,x+1}
            y = n - x
            if y < 1:
                break
            if ctx.table.is_practical(x**3 + y**3):
                return (x, y)
        return None

    _rec(add, "C4.24.i", "even n = x + y, {x-1,x,x+1} a second-kind sandwich, "
         "x^3+y^3 practical", D(6, parity="even"), c424i, no_failures(),
         default_hi=2000, notes="general exponent family stated without thresholds")

    def c424ii(ctx, n):
        qf = ctx.qf
        for p in ctx.practicals:
            q = n - p
            if q < 1:
                break
            if qf[q] and ctx.table.is_practical(p**6 + q**6):
                return (p, q)
        return None

    _rec(add, "C4.24.ii", "even n = p + q, p, q practical, p^6+q^6 practical",
         D(2, parity="even"), c424ii, no_failures(), default_hi=600)

    def c425i_a(ctx, n):
        qf = ctx.qf
        for q in ctx.practicals:
            if q + 4 > ctx.bound or q >= n:
                break
            p = n - q
            if q >= 5 and qf[q - 4] and qf[q + 4] and ctx.ispp(p):
                return (p, q)
        return None

    _rec(add, "C4.25.i.a", "n = p + q, p prime or practical, q, q-4, q+4 practical",
         D(9), c425i_a, no_failures())

    def c425i_b(ctx, n):
        pf, qf = ctx.pf, ctx.qf
        for q in ctx.practicals:
            p = n - q
            if p < 2:
                break
            both_prime = ctx.isp(p) and ctx.isp(p + 6)
            both_practical = ctx.ispr(p) and ctx.ispr(p + 6)
            if both_prime or both_practical:
                return (p, q)
        return None

    _rec(add, "C4.25.i.b", "n = p + q, q practical, p and p+6 both prime or "
         "both practical", D(6), c425i_b, no_failures())

    def c425ii(ctx, n):
        qf = ctx.qf
        for y in ctx.practicals:
            x = n - y
            if x < 1:
                break
            if y + 6 <= ctx.bound and qf[y + 6] and ctx.isp(6 * x - 1) and ctx.isp(6 * x + 1):
                return (x, y)
        return None

    _rec(add, "C4.25.ii", "n = x + y with 6x+-1 prime and y, y+6 practical",
         D(11), c425ii, no_failures())

    def c425iii_a(ctx, n):
        x = 1
        while x * x < n:
            y = n - x * x
            if ctx.ispr(2 * x) and ctx.practical_product(2 * x, y):
                return (x, y)
            x += 1
        return None

    _rec(add, "C4.25.iii.a", "n = x^2 + y (x, y >= 1) with 2x and 2xy practical",
         D(2), c425iii_a, no_failures())

    def c425iii_b(ctx, n):
        x = 1
        while x**3 < n:
            y = n - x**3
            if ctx.ispr(2 * x) and ctx.practical_product(4 * x, y):
                return (x, y)
            x += 1
        return None

    _rec(add, "C4.25.iii.b", "n = x^3 + y (x, y >= 1) with 2x and 4xy practical",
         D(2), c425iii_b, no_failures())


def _c426_430(add) -> None:
    def c426i(ctx, n):
        sf = ctx.set_s_flags
        for p in ctx.set_s:
            q = n - p
            if q < 1:
                break
            if ctx.ispp(q):
                return (p, q)
        return None

    _rec(add, "C4.26.i", "n = p + q, p in S (prime flanked by practicals), "
         "q prime or practical", D(4), c426i, no_failures(), 10**8)

    def c426ii(ctx, n):
        pf = ctx.pf
        for p in ctx.set_s:
            q = n - 2 * p
            if q < 2:
                break
            if pf[q]:
                return (p, q)
        return None

    _rec(add, "C4.26.ii", "odd n = 2p + q with p in S and q prime",
         D(9, parity="odd"), c426ii, exact({223, 875, 899, 923}), 10**8)

    def c426iii(ctx, n):
        qf = ctx.qf
        for p in ctx.twin_lower_practical:
            q = n - p
            if q < 1:
                break
            if qf[q]:
                return (p, q)
        return None

    _rec(add, "C4.26.iii", "odd n = p + q, {p,p+2} twin primes, p+1 and q practical",
         D(5, parity="odd"), c426iii, exact({55}), 10**8)

    def c427i(ctx, n):
        w = 1 + (n & 1)
        tf = ctx.set_t_flags
        for p in ctx.set_s:
            rem1 = n - w * p
            if rem1 < 5:
                break
            for q in ctx.set_s:
                r = rem1 - q
                if r < 4:
                    break
                if tf[r]:
                    return (p, q, r)
        return None

    _rec(add, "C4.27.i", "n = (1+(n mod 2))p + q + r with p, q in S and r in T",
         D(12), c427i, no_failures(), 10**7)

    def c427ii_a(ctx, n):
        tf = ctx.set_t_flags
        for p in ctx.set_s:
            rem1 = n - p
            if rem1 < 4:
                break
            for q in ctx.set_s:
                r = rem1 - q
                if r < 1:
                    break
                if 6 * r <= ctx.bound and tf[6 * r]:
                    return (p, q, r)
        return None

    add(ConjectureRecord(
        "C4.27.ii.a", "n = p + q + r with p, q in S and 6r in T",
        D(7), c427ii_a, no_failures(), bound_multiplier=7))

    def c427ii_b(ctx, n):
        tf = ctx.set_t_flags
        pool = ctx.__dict__.get("_sixth_t")
        if pool is None:
            pool = [x for x in range(1, ctx.bound // 6 + 1) if tf[6 * x]]
            ctx.__dict__["_sixth_t"] = pool
        pset = ctx.__dict__.setdefault(
            "_sixth_t_set", frozenset(pool))
        for x in pool:
            if 3 * x > n:
                break
            for y in pool:
                z = n - x - y
                if z < y:
                    break
                if z in pset:
                    return (x, y, z)
        return None

    add(ConjectureRecord(
        "C4.27.ii.b", "n = x + y + z with 6x, 6y, 6z all in T",
        D(3), c427ii_b, no_failures(), bound_multiplier=7))

    def c427ii_c(ctx, n):
        sss = ctx.weighted_s_mask((1, 1, 1))
        for p in ctx.set_s:
            if p >= n:
                break
            if (sss >> (n - p)) & 1:
                return p
        return None

    _rec(add, "C4.27.ii.c", "even n expressible as a sum of four elements of S",
         D(12, parity="even"), c427ii_c, no_failures())

    def c427iii_a(ctx, n):
        tf = ctx.set_t_flags
        k = 0
        while k * k < n:
            rem = n - k * k
            for p in ctx.set_s:
                r = rem - p
                if r < 4:
                    break
                if tf[r]:
                    return (p, r, k)
            k += 1
        return None

    _rec(add, "C4.27.iii.a", "n = s + t + square with s in S, t in T",
         D(8), c427iii_a, no_failures())

    def c427iii_b(ctx, n):
        sf = ctx.set_s_flags
        tri = ctx.triangulars
        for a in tri:
            if a > n:
                break
            for b in tri:
                s = n - a - b
                if s < 3:
                    break
                if s <= ctx.bound and sf[s]:
                    return (s, a, b)
        return None

    _rec(add, "C4.27.iii.b", "n = s + two triangular numbers with s in S",
         D(3), c427iii_b, no_failures())

    def c428i(ctx, n):
        pf = ctx.pf
        for p in ctx.set_s:
            rem = n - p
            if rem < 3:
                break
            for f in ctx.fibonaccis:
                q = rem - f
                if q < 3:
                    break
                if pf[q] and ctx.isp(q + 2):
                    return (p, q, f)
        return None

    _rec(add, "C4.28.i", "n = p + q + F with p in S, q prime with q+2 prime, "
         "and F a Fibonacci number (0 allowed)",
         D(6), c428i, no_failures(), 2 * 10**6)

    def c428ii(ctx, n):
        w = 1 + (n & 1)
        pf = ctx.pf
        for p in ctx.set_s:
            rem = n - w * p
            if rem < 5:
                break
            for t in ctx.powers_of_two:
                q = rem - t
                if q < 3:
                    break
                if pf[q] and ctx.isp(q + 2):
                    return (p, q, t)
        return None

    _rec(add, "C4.28.ii", "n = (1+(n mod 2))p + q + 2^k, p in S, {q,q+2} twin "
         "primes, k >= 1", D(10), c428ii, no_failures())

    for triple in ((1, 2, 3), (1, 2, 4), (1, 2, 8), (1, 2, 9), (1, 3, 5), (1, 3, 8)):
        a, b, c = triple

        def c429(ctx, n, a=a, b=b, c=c):
            tail = ctx.weighted_s_mask((b, c))
            for p in ctx.set_s:
                rem = n - a * p
                if rem < 0:
                    break
                if (tail >> rem) & 1:
                    return p
            return None

        s = a + b + c
        _rec(add, f"C4.29{triple}",
             f"n = {a}p + {b}q + {c}r with p, q, r in S (n = {s} mod 2, n >= {3 * s})",
             D(3 * s, mod=(2, frozenset({s % 2}))), c429, no_failures(),
             notes="the only-if direction (other triples fail) is not per-n checkable")

    def c430(ctx, n):
        ss = ctx.weighted_s_mask((1, 1))
        for p in ctx.set_s:
            if p >= n:
                break
            if (ss >> (n - p)) & 1:
                return p
        return None

    _rec(add, "C4.30", "odd n (not +-1 mod 12) as a sum of three elements of S",
         D(9, parity="odd", extra=lambda n: n % 12 not in (1, 11)),
         c430, exact({201, 447}))
