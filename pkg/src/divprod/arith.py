"""Integer substrate: factorization, sieving, divisor enumeration and the
classical multiplicative functions (Mobius, totient, sigma, radical).

Everything downstream works on a ``Factorization``; single integers are
factored either through a smallest-prime-factor table (bulk work) or through
deterministic Miller-Rabin plus Brent's rho (isolated queries below 2^63).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import CapabilityError, DomainError, ResourceError

#: Largest n accepted by direct factoring; beyond this we refuse rather than
#: degrade to probabilistic answers.
FACTOR_LIMIT = 2**63

#: Memory budget cap for SPF tables (uint32 entries, ~400 MB at the cap).
SPF_LIMIT_MAX = 10**8

#: Default table size used by bulk range verification.
DEFAULT_SIEVE_LIMIT = 10**7

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition: n = prod p^a, factors ascending in p."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


@dataclass(frozen=True)
class SpfTable:
    """Smallest-prime-factor table for 2 <= m <= limit; immutable once built."""

    limit: int
    spf: np.ndarray

    def smallest_factor(self, m: int) -> int:
        if not 2 <= m <= self.limit:
            raise DomainError(f"m={m} outside table range [2, {self.limit}]")
        return int(self.spf[m])


def build_spf_table(limit: int) -> SpfTable:
    if limit < 2:
        raise DomainError(f"sieve limit must be at least 2, got {limit}")
    if limit > SPF_LIMIT_MAX:
        raise ResourceError(
            f"sieve limit {limit} exceeds memory budget cap {SPF_LIMIT_MAX}")
    spf = _backend.kernel.build_spf(limit)
    spf.setflags(write=False)
    return SpfTable(limit=limit, spf=spf)


def primes_up_to(limit: int, table: SpfTable | None = None) -> np.ndarray:
    """Ascending array of all primes <= limit."""
    if limit < 2:
        return np.empty(0, dtype=np.uint32)
    if table is None or table.limit < limit:
        table = build_spf_table(limit)
    spf = table.spf[: limit + 1]
    idx = np.arange(2, limit + 1, dtype=np.uint32)
    return idx[spf[2:] == idx]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the base set is valid far beyond 2^63."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= FACTOR_LIMIT:
        raise CapabilityError(f"primality above 2^63 not supported, got {n}")
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n; result verified by the caller."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_general(n: int) -> dict[int, int]:
    """Trial division by small primes, then Miller-Rabin + Brent splitting."""
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    # Deterministic seed per n keeps isolated queries reproducible.
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = _brent_rho(m, rng)
        stack += [d, m // d]
    return out


def factorize(n: int, hint: SpfTable | None = None) -> Factorization:
    """Canonical factorization of n >= 1; uses the SPF table when it covers n."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return Factorization(1, ())
    if hint is not None and n <= hint.limit:
        spf = hint.spf
        fac: list[tuple[int, int]] = []
        m = n
        while m > 1:
            p = int(spf[m])
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            fac.append((p, a))
        fac.sort()
        return Factorization(n, tuple(fac))
    if n >= FACTOR_LIMIT:
        raise CapabilityError(f"factoring above 2^63 not supported, got {n}")
    out = _factor_general(n)
    check = 1
    for p, a in out.items():
        check *= p**a
    if check != n:  # pragma: no cover - guards the randomized splitter
        raise AssertionError(f"factorization of {n} failed verification")
    return Factorization(n, tuple(sorted(out.items())))


def recompose(f: Factorization) -> int:
    out = 1
    for p, a in f.factors:
        out *= p**a
    return out


def divisors(f: Factorization) -> list[int]:
    """All divisors of n, ascending; mixed-radix exponent counters then sort."""
    divs = [1]
    for p, a in f.factors:
        pk = 1
        block = []
        for _ in range(a):
            pk *= p
            block += [d * pk for d in divs]
        divs += block
    divs.sort()
    return divs


def divisor_factorizations(f: Factorization) -> list[tuple[int, tuple[int, ...]]]:
    """(d, exponent vector) for every divisor d, in enumeration order.

    The exponent vector is aligned with ``f.factors``; callers use it to
    evaluate multiplicative functions of d without refactorizing.
    """
    out = [(1, ())]
    for p, a in f.factors:
        nxt = []
        for d, exps in out:
            pk = 1
            for j in range(a + 1):
                nxt.append((d * pk, exps + (j,)))
                pk *= p
        out = nxt
    return out


def squarefree_divisors(f: Factorization) -> list[int]:
    """The 2^omega subset products of distinct primes, ascending."""
    divs = [1]
    for p, _ in f.factors:
        divs += [d * p for d in divs]
    divs.sort()
    return divs


def mobius(f: Factorization) -> int:
    if any(a >= 2 for _, a in f.factors):
        return 0
    return -1 if f.omega % 2 else 1


def totient(f: Factorization) -> int:
    out = 1
    for p, a in f.factors:
        out *= p ** (a - 1) * (p - 1)
    return out


def sigma(f: Factorization) -> int:
    out = 1
    for p, a in f.factors:
        out *= (p ** (a + 1) - 1) // (p - 1)
    return out


def radical(f: Factorization) -> int:
    out = 1
    for p, _ in f.factors:
        out *= p
    return out
