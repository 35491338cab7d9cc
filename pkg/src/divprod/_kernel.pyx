# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: SPF sieve and bulk exact identity checks.

Twin of _kernel_py; fixed-width C integers instead of bignums, so the
int-exact entry points carry capability guards (gdineva_int_supported) and
callers must respect them.  All rational arithmetic runs on unsigned 128-bit
integers over a shared denominator, which the size guards keep overflow-free.

Term buffers are sized 512: omega(n) <= 9 for n < 2^32, so the subset
enumeration never needs more than 2^9 slots.
"""

import numpy as np

from libc.math cimport pow as cpow, fabs, fmax

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

# Bit headroom inside u128 accumulators, see gdineva_int_supported.
cdef int U128_BUDGET = 126
cdef int MAX_OMEGA = 9


def build_spf(long long limit):
    """Smallest-prime-factor table as uint32; spf[m] = m exactly when m is prime."""
    out = np.zeros(limit + 1, dtype=np.uint32)
    cdef unsigned int[::1] spf = out
    cdef long long i, j
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = <unsigned int> i
            if i <= limit // i:
                j = i * i
                while j <= limit:
                    if spf[j] == 0:
                        spf[j] = <unsigned int> i
                    j += i
    return out


cdef inline u128 pow_u128(u64 base, int e):
    cdef u128 r = 1
    cdef int k
    for k in range(e):
        r *= base
    return r


def dineva_range(spf_arr, long long lo, long long hi):
    """Exact check of sum_{squarefree d|n} 1/phi(d) == n/phi(n) on lo..hi.

    Sum side by subset enumeration over the common denominator prod (p-1),
    closed side by n/phi(n); compared cross-multiplied in u64 (safe for
    n < 2^32).  Returns (checked, failures, first failing n or 0).
    """
    cdef const unsigned int[::1] spf = spf_arr
    cdef u64 terms[512]
    cdef long long n, first_bad = 0, failures = 0
    cdef u64 m, p, b, phi, den, num, pk
    cdef int cnt, j, a
    if lo < 1 or hi >= <long long> len(spf_arr) or hi >= (<long long> 1 << 32):
        raise ValueError("range outside table or u64 safety bound")
    for n in range(lo, hi + 1):
        m = <u64> n
        phi = 1
        den = 1
        cnt = 1
        terms[0] = 1
        while m > 1:
            p = spf[m]
            a = 0
            pk = 1
            while m % p == 0:
                m //= p
                a += 1
                pk *= p
            phi *= (pk // p) * (p - 1)
            b = p - 1
            den *= b
            for j in range(cnt):
                terms[cnt + j] = terms[j] * b
            cnt += cnt
        num = 0
        for j in range(cnt):
            num += terms[j]
        if num * phi != (<u64> n) * den:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad


def gdineva_int_supported(long long hi, long long s):
    """True when the u128 accumulators provably cannot overflow for n <= hi."""
    cdef long long bl = 0, h = hi
    while h:
        bl += 1
        h >>= 1
    if s >= 0:
        return (s + 1) * bl + 4 <= U128_BUDGET
    return max(-s, 1) * bl + MAX_OMEGA + 4 <= U128_BUDGET


def gdineva_int_range(spf_arr, long long lo, long long hi, long long s_in):
    """Exact four-way check of the s-weighted totient divisor sum on lo..hi.

    Same structure as the Python twin: subset-enumeration numerator versus
    the three closed product forms, all on the shared denominator
    prod (p-1)p^s (p^|s| cleared into numerators when s < 0).
    """
    cdef const unsigned int[::1] spf = spf_arr
    cdef u128 terms[512]
    cdef long long n, first_bad = 0, failures = 0
    cdef int s = <int> s_in
    cdef int t = <int> s_in + 1
    cdef u64 m, p
    cdef u128 a, b, den, num_prod, num_alt, den_alt, num_zeta, den_zeta
    cdef u128 num_sum, q, fa_n, fa_d, fz_n, fz_d
    cdef int cnt, j
    cdef bint ok
    if lo < 1 or hi >= <long long> len(spf_arr):
        raise ValueError("range outside table")
    if not gdineva_int_supported(hi, s_in):
        raise OverflowError(f"s={s_in} at hi={hi} exceeds the u128 budget")
    for n in range(lo, hi + 1):
        m = <u64> n
        den = 1
        num_prod = 1
        num_alt = 1
        den_alt = 1
        num_zeta = 1
        den_zeta = 1
        cnt = 1
        terms[0] = 1
        while m > 1:
            p = spf[m]
            while m % p == 0:
                m //= p
            if s >= 0:
                a = 1
                b = (p - 1) * pow_u128(p, s)
            else:
                a = pow_u128(p, -s)
                b = p - 1
            den *= b
            for j in range(cnt):
                terms[cnt + j] = terms[j] * a
                terms[j] = terms[j] * b
            cnt += cnt
            num_prod *= a + b
            if t >= 1:
                fa_n = pow_u128(p, t) - pow_u128(p, t - 1) + 1
                fa_d = pow_u128(p, t - 1) * (p - 1)
            elif t == 0:
                fa_n = 2 * p - 1
                fa_d = p - 1
            else:
                fa_n = pow_u128(p, 1 - t) + p - 1
                fa_d = p - 1
            num_alt *= fa_n
            den_alt *= fa_d
            if t >= 1:
                q = (p - 1) * pow_u128(p, t)
                fz_n = (q + p) // p
                fz_d = q // p
            elif t == 0:
                fz_n = 2 * p - 1
                fz_d = p - 1
            else:
                fz_n = pow_u128(p, 1 - t) + p - 1
                fz_d = p - 1
            num_zeta *= fz_n
            den_zeta *= fz_d
        num_sum = 0
        for j in range(cnt):
            num_sum += terms[j]
        ok = (num_sum == num_prod and num_alt == num_sum and den_alt == den
              and num_zeta == num_sum and den_zeta == den)
        if not ok:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad


def gdineva_real_range(spf_arr, long long lo, long long hi, double s,
                       double rel_tol):
    """Float four-way check for real s; forms must pairwise agree within rel_tol."""
    cdef const unsigned int[::1] spf = spf_arr
    cdef double terms[512]
    cdef long long n, first_bad = 0, failures = 0
    cdef u64 m, p
    cdef double h, inv_p, f_prod, f_alt, f_zeta, f_sum, err, worst = 0.0
    cdef int cnt, j
    cdef bint bad
    if lo < 1 or hi >= <long long> len(spf_arr):
        raise ValueError("range outside table")
    for n in range(lo, hi + 1):
        m = <u64> n
        f_prod = 1.0
        f_alt = 1.0
        f_zeta = 1.0
        cnt = 1
        terms[0] = 1.0
        while m > 1:
            p = spf[m]
            while m % p == 0:
                m //= p
            h = 1.0 / ((p - 1) * cpow(p, s))
            for j in range(cnt):
                terms[cnt + j] = terms[j] * h
            cnt += cnt
            f_prod *= 1.0 + h
            inv_p = 1.0 / p
            f_alt *= (1.0 - inv_p + cpow(p, -(s + 1.0))) / (1.0 - inv_p)
            f_zeta *= 1.0 + (p / (p - 1.0)) * cpow(p, -(s + 1.0))
        f_sum = 0.0
        for j in range(cnt):
            f_sum += terms[j]
        bad = False
        err = fabs(f_sum - f_prod) / fmax(1.0, fmax(fabs(f_sum), fabs(f_prod)))
        if err > worst:
            worst = err
        if err > rel_tol:
            bad = True
        err = fabs(f_sum - f_alt) / fmax(1.0, fmax(fabs(f_sum), fabs(f_alt)))
        if err > worst:
            worst = err
        if err > rel_tol:
            bad = True
        err = fabs(f_sum - f_zeta) / fmax(1.0, fmax(fabs(f_sum), fabs(f_zeta)))
        if err > worst:
            worst = err
        if err > rel_tol:
            bad = True
        if bad:
            failures += 1
            if first_bad == 0:
                first_bad = n
    return hi - lo + 1, failures, first_bad, worst
