"""Pure-Python twin of the compiled kernel.

Same entry points, same semantics, Python bignums instead of fixed-width C
integers, so nothing here has a size limit beyond memory.  The compiled
kernel must stay observably equivalent; the backend test suite compares the
two on shared ranges.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def build_spf(limit: int) -> np.ndarray:
    """Smallest-prime-factor table as uint32; spf[m] = m exactly when m is prime."""
    spf = np.zeros(limit + 1, dtype=np.uint32)
    for i in range(2, int(limit**0.5) + 1):
        if spf[i] == 0:
            sl = spf[i * i :: i]
            sl[sl == 0] = i
    rest = np.flatnonzero(spf[2:] == 0) + 2
    spf[rest] = rest
    return spf


def _distinct_primes(spf, n: int) -> list[int]:
    ps = []
    m = n
    while m > 1:
        p = int(spf[m])
        ps.append(p)
        while m % p == 0:
            m //= p
    return ps


def dineva_range(spf: np.ndarray, lo: int, hi: int) -> tuple[int, int, int]:
    """Check sum over squarefree d|n of 1/phi(d) against n/phi(n) for lo..hi.

    Sum side: literal subset enumeration over the distinct primes, on the
    common denominator prod (p-1).  Closed side: n/phi(n).  Cross-multiplied
    integer comparison, so the whole check is exact.
    Returns (checked, failures, first failing n or 0).
    """
    failures = 0
    first_bad = 0
    for n in range(lo, hi + 1):
        m = n
        phi = 1
        den = 1
        terms = [1]
        while m > 1:
            p = int(spf[m])
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            phi *= p ** (a - 1) * (p - 1)
            b = p - 1
            den *= b
            terms += [t * b for t in terms]
        num = sum(terms)
        if num * phi != n * den:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad


def gdineva_int_supported(hi: int, s: int) -> bool:
    return True


def _alternate_factor(p: int, t: int) -> tuple[int, int]:
    # (1 - 1/p + p^-t) / (1 - 1/p) as an integer pair, t = s+1.
    if t >= 1:
        return p**t - p ** (t - 1) + 1, p ** (t - 1) * (p - 1)
    if t == 0:
        return 2 * p - 1, p - 1
    return p ** (1 - t) + p - 1, p - 1


def _zeta_local_factor(p: int, t: int) -> tuple[int, int]:
    # 1 + zeta_p(1) * p^-t with zeta_p(1) = p/(p-1), t = s+1; the common
    # factor p is removed so the pair lands on the same denominator as the
    # other product forms.
    if t >= 1:
        num = (p - 1) * p**t + p
        den = (p - 1) * p**t
        return num // p, den // p
    if t == 0:
        return 2 * p - 1, p - 1
    return p ** (1 - t) + p - 1, p - 1


def gdineva_int_range(spf: np.ndarray, lo: int, hi: int, s: int) -> tuple[int, int, int]:
    """Exact four-way check of the s-weighted totient divisor sum on lo..hi.

    Per n, on the shared denominator prod (p-1)p^s (s >= 0; the s < 0
    analogue clears p^|s| into numerators):
      sum side:   subset enumeration of prod 1/((p-1) p^s) over squarefree d
      product:    prod of ((p-1)p^s + 1)
      alternate:  prod of (1 - 1/p + p^-(s+1)) / (1 - 1/p) factors
      zeta-local: prod of (1 + zeta_p(1)/p^(s+1)) factors
    All four must be identical integer pairs.
    """
    t = s + 1
    failures = 0
    first_bad = 0
    for n in range(lo, hi + 1):
        m = n
        num_prod = 1
        num_alt = 1
        num_zeta = 1
        den = 1
        den_alt = 1
        den_zeta = 1
        terms = [1]
        while m > 1:
            p = int(spf[m])
            while m % p == 0:
                m //= p
            if s >= 0:
                a = 1
                b = (p - 1) * p**s
            else:
                a = p**-s
                b = p - 1
            den *= b
            terms = [u * b for u in terms] + [u * a for u in terms]
            num_prod *= a + b
            fa_n, fa_d = _alternate_factor(p, t)
            num_alt *= fa_n
            den_alt *= fa_d
            fz_n, fz_d = _zeta_local_factor(p, t)
            num_zeta *= fz_n
            den_zeta *= fz_d
        num_sum = sum(terms)
        ok = (
            num_sum == num_prod
            and num_alt == num_sum
            and den_alt == den
            and num_zeta == num_sum
            and den_zeta == den
        )
        if not ok:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad


def gdineva_real_range(
    spf: np.ndarray, lo: int, hi: int, s: float, rel_tol: float
) -> tuple[int, int, int, float]:
    """Float four-way check for real s; forms must pairwise agree within rel_tol."""
    failures = 0
    first_bad = 0
    worst = 0.0
    for n in range(lo, hi + 1):
        ps = _distinct_primes(spf, n)
        terms = [1.0]
        f_prod = 1.0
        f_alt = 1.0
        f_zeta = 1.0
        for p in ps:
            h = 1.0 / ((p - 1) * p**s)
            terms = [u for u in terms] + [u * h for u in terms]
            f_prod *= 1.0 + h
            inv_p = 1.0 / p
            f_alt *= (1.0 - inv_p + p ** (-(s + 1.0))) / (1.0 - inv_p)
            f_zeta *= 1.0 + (p / (p - 1.0)) * p ** (-(s + 1.0))
        f_sum = sum(terms)
        bad = False
        for x, y in ((f_sum, f_prod), (f_sum, f_alt), (f_sum, f_zeta)):
            err = abs(x - y) / max(1.0, abs(x), abs(y))
            if err > worst:
                worst = err
            if err > rel_tol:
                bad = True
        if bad:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad, worst
