#!/usr/bin/env python3
"""Independent oracle for the expected values frozen into the C++ tests.

Everything here is exact fractions.Fraction arithmetic, implemented with
deliberately naive methods (plain bisection, plain Riemann sums, plain
partial sums) so it shares no code path with the library under test.

Run:  python3 tests/oracle/derive_expected.py
"""

from fractions import Fraction as F
import math


def bisect_root(target: F, n: int, lo: F, hi: F, eps: F) -> tuple[F, F]:
    """Bracket the n-th root of target by bisection on mid**n <= target."""
    assert lo**n <= target <= hi**n
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if mid**n <= target:
            lo = mid
        else:
            hi = mid
    return lo, hi


def riemann_ln(x: F, nsub: int) -> tuple[F, F]:
    """Lower/upper Riemann sums for the integral of 1/t over [1, x], x > 1.

    1/t is decreasing, so right endpoints give the lower sum and left
    endpoints the upper sum.  Terms are accumulated as integers scaled by
    2**96, rounding each term down for the lower sum and up for the upper
    sum, which keeps the pair a valid enclosure of the true sums.
    """
    assert x > 1
    shift = 2**96
    # dt/(1 + i*dt) with dt = u/(v*nsub), x - 1 = u/v  ==>  u/(v*nsub + i*u)
    u, v = (x - 1).numerator, (x - 1).denominator
    c = v * nsub
    num = shift * u
    lo_acc = 0
    hi_acc = 0
    for i in range(1, nsub):
        q, r = divmod(num, c + i * u)
        lo_acc += q
        hi_acc += q + (1 if r else 0)
    lower = F(lo_acc, shift) + F(u, c + nsub * u)
    upper = F(hi_acc, shift) + F(u, c)
    return lower, upper


def e_partial_sums(eps: F) -> tuple[F, F, int]:
    """Enclosure of e from partial sums: remainder after n terms < 3/(n+1)!."""
    s = F(0)
    term = F(1)
    n = 0
    while True:
        s += term
        rem = F(3) * term / (n + 1)  # 3 / (n+1)!  since term = 1/n!
        if rem <= eps:
            return s, s + rem, n
        n += 1
        term /= n


def dec(lo: F, hi: F, digits: int) -> tuple[str, str]:
    """Outward decimal pair at the given number of fractional digits."""
    scale = 10**digits
    lo_s = math.floor(lo * scale)
    hi_s = math.ceil(hi * scale)

    def fmt(v: int) -> str:
        sign = "-" if v < 0 else ""
        v = abs(v)
        return f"{sign}{v // scale}.{v % scale:0{digits}d}"

    return fmt(lo_s), fmt(hi_s)


def main() -> None:
    # sqrt(2) by bisection on y^2 = 2 over [1, 2]
    lo, hi = bisect_root(F(2), 2, F(1), F(2), F(1, 10**4))
    print("sqrt2 bracket      :", dec(lo, hi, 6), "in [1.414, 1.415]:",
          F(1414, 1000) <= lo and hi <= F(1415, 1000))

    # 2(sqrt(2) - 1) and 6(1 - 3^(-1/6)) versus 1
    b = 2 * (hi - 1)
    print("2(sqrt2-1) hi      :", dec(2 * (lo - 1), b, 6), "< 1:", b < 1)
    lo3, hi3 = bisect_root(F(3), 6, F(1), F(3), F(1, 10**6))
    blo = 6 * (1 - 1 / lo3)   # lower bound of 6(1 - 3^(-1/6))
    bhi = 6 * (1 - 1 / hi3)
    lo_b, hi_b = min(blo, bhi), max(blo, bhi)
    print("6(1-3^(-1/6))      :", dec(lo_b, hi_b, 6), "> 1:", lo_b > 1)

    # ln 2, ln 3, ln 10, ln(5/4) from Riemann sums
    for x, nsub in ((F(2), 2 * 10**5), (F(3), 6 * 10**5), (F(10), 10**6),
                    (F(5, 4), 10**5)):
        lo, hi = riemann_ln(x, nsub)
        print(f"ln {str(x):5s} bracket  :", dec(lo, hi, 9))

    # e from partial sums
    lo, hi, n = e_partial_sums(F(1, 10**14))
    print("e bracket          :", dec(lo, hi, 13), f"(n={n})")
    print("e 12-digit truncs  :", dec(lo, hi, 12))
    print("e 6-digit pair     :", dec(lo, hi, 6))

    # exp(-1) and exp(1/2), exp(2), exp(-2) from partial sums with
    # alternating/positive tails bounded by 3^ceil(x) * |x|^(n+1)/(n+1)!
    for x in (F(-1), F(1, 2), F(2), F(-2), F(-1, 2)):
        s = F(0)
        term = F(1)
        m = 3 ** max(0, math.ceil(x)) if x > 0 else 1
        k = 0
        while True:
            s += term
            rem = m * abs(x) ** (k + 1) * term * (
                F(1) if x >= 0 else F(1)) / math.factorial(k + 1) * math.factorial(k)
            rem = m * abs(x) ** (k + 1) / math.factorial(k + 1)
            if rem <= F(1, 10**10):
                break
            k += 1
            term = term * x / k
        print(f"exp({str(x):4s}) bracket :", dec(s - rem, s + rem, 9))

    # 1 - 1/e and e - 1 (derivative bracket at x0=0, h=1)
    elo, ehi, _ = e_partial_sums(F(1, 10**10))
    print("1 - 1/e bracket    :", dec(1 - 1 / elo, 1 - 1 / ehi, 9))
    print("e - 1   bracket    :", dec(elo - 1, ehi - 1, 9))

    # compound interest values (1 + 1/n)^n and the gap to e
    emid = (elo + ehi) / 2
    prev_err = None
    for k in range(1, 7):
        n = 10**k
        v = (F(n + 1, n)) ** n
        err = abs(emid - v)
        dec_err = dec(err, err, 9)[0]
        mono = "" if prev_err is None else f" decreasing: {err < prev_err}"
        print(f"compound n=10^{k}    : err {dec_err}{mono}")
        prev_err = err

    # compound(1, n) for small n
    print("compound(1,1)      :", (F(2, 1)) ** 1)
    print("compound(1,2)      :", (F(3, 2)) ** 2)


if __name__ == "__main__":
    main()
