"""Partial zeta functions zeta_n(s) = prod_{p|n} 1/(1 - p^-s), their exact
identities, the sigma local generating factors, and truncated global Euler
products with explicit tail bounds.

Singular parameter values (s=0 for zeta_n, s in {0,1} for the closed sigma
factor) raise SingularityError rather than producing infinities; truncation
depths are chosen from a proven tail bound with a hard cap, so every
approximation here comes with a stated accuracy.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .arith import Factorization, SpfTable, primes_up_to, totient
from .errors import (ConsistencyError, ConvergenceError, ResourceError,
                     SingularityError)
from .identities import IdentityReport, squarefree_dirichlet_sum
from .values import SValue, Value, approx_equal, inv_pow

#: Hard cap on sigma-factor truncation depth.
TRUNCATION_CAP = 1000

#: Hard cap on the prime bound of the truncated global product.
PRIME_BOUND_CAP = 10**8

#: Hard cap on series length in zeta_reference.
SERIES_CAP = 5 * 10**6


def partial_zeta(f: Factorization, s: SValue) -> Value:
    """zeta_n(s) = prod over p|n of 1/(1 - p^-s); empty product (n=1) is 1."""
    if s == 0 and f.n > 1:
        raise SingularityError("zeta_n(s) is singular at s=0 for n>1")
    out: Value = Fraction(1)
    for p in f.primes:
        out = out / (1 - inv_pow(p, s))
    return out


def zeta_ratio_identity_check(f: Factorization, s: SValue) -> tuple[Value, Value]:
    """(sum mu^2(d)/d^s by enumeration, zeta_n(s)/zeta_n(2s)); equal in-domain."""
    lhs = squarefree_dirichlet_sum(f, s)
    rhs = partial_zeta(f, s) / partial_zeta(f, 2 * s)
    return lhs, rhs


def zeta_totient_identity(f: Factorization) -> tuple[Value, Value]:
    """(zeta_n(1), n/phi(n)); equal for every n."""
    return partial_zeta(f, 1), Fraction(f.n, totient(f))


def zeta_product_identity(f: Factorization, s: SValue) -> tuple[Value, Value]:
    """(n zeta_n(s) / phi(n), prod 1/((1 - 1/p)(1 - p^-s))); equal in-domain."""
    lhs = Fraction(f.n, totient(f)) * partial_zeta(f, s)
    rhs: Value = Fraction(1)
    for p in f.primes:
        rhs = rhs / ((1 - Fraction(1, p)) * (1 - inv_pow(p, s)))
    return lhs, rhs


def sigma_local_factor(p: int, s: SValue, mode: str = "closed",
                       depth: int = 0) -> Value:
    """Local generating factor of the divisor-sum function sigma at prime p.

    closed:     1 / ((1 - p^-s)(1 - p^(1-s))), singular at s in {0, 1};
    truncated:  sum_{k=0..depth} sigma(p^k)/p^(ks), finite for every s.
    """
    if mode == "closed":
        if s == 0 or s == 1:
            raise SingularityError(
                f"closed sigma factor is singular at s={s} (need s not in {{0, 1}})")
        return 1 / ((1 - inv_pow(p, s)) * (1 - inv_pow(p, s - 1)))
    if mode == "truncated":
        if depth < 0:
            raise ConvergenceError(f"truncation depth must be >= 0, got {depth}")
        total: Value = 0
        pk = 1
        for k in range(depth + 1):
            sigma_pk = (pk * p - 1) // (p - 1)
            total += sigma_pk * inv_pow(pk, s)
            pk *= p
        return total
    raise ConvergenceError(f"unknown mode {mode!r}, expected 'closed' or 'truncated'")


def sigma_tail_bound(p: int, s: SValue, depth: int) -> Value:
    """Bound on the truncated sigma factor's tail, from sigma(p^k) <= (k+1)p^k:

        sum_{k>depth} (k+1) x^k  =  x^(depth+1) ((depth+2) - (depth+1)x) / (1-x)^2

    with x = p^(1-s); requires s > 1 so that x < 1.
    """
    if not s > 1:
        raise ConvergenceError(f"tail bound requires s > 1, got s={s}")
    x = inv_pow(p, s - 1)
    return x ** (depth + 1) * ((depth + 2) - (depth + 1) * x) / (1 - x) ** 2


def choose_truncation_depth(p: int, s: SValue, tol: float) -> int:
    """Smallest depth whose tail bound is below tol, capped at TRUNCATION_CAP."""
    if tol <= 0:
        raise ConvergenceError(f"tol must be positive, got {tol}")
    for depth in range(TRUNCATION_CAP + 1):
        if sigma_tail_bound(p, s, depth) < tol:
            return depth
    return TRUNCATION_CAP


def sigma_partial_zeta_check(f: Factorization, s: SValue, depth: int | None = None,
                             tol: float = 1e-9) -> IdentityReport:
    """Check prod of truncated sigma factors against zeta_n(s) zeta_n(s-1).

    Also recomputes the product from the closed factors, which must match the
    zeta side exactly; a closed-form mismatch is a ConsistencyError, not a
    report entry.  The reported comparison is the truncated one, so the
    report is always approx-mode: truncation cannot be an exact equality.
    """
    if not s > 1:
        raise ConvergenceError(
            f"sigma/zeta comparison needs s > 1 for convergence, got s={s}")
    rhs = partial_zeta(f, s) * partial_zeta(f, s - 1)
    closed: Value = Fraction(1)
    truncated: Value = Fraction(1)
    for p in f.primes:
        closed = closed * sigma_local_factor(p, s, mode="closed")
        k = choose_truncation_depth(p, s, tol) if depth is None else depth
        truncated = truncated * sigma_local_factor(p, s, mode="truncated", depth=k)
    if not approx_equal(closed, rhs, 1e-12):
        raise ConsistencyError(
            f"closed sigma factors disagree with zeta_n(s) zeta_n(s-1) at "
            f"n={f.n}, s={s}: {closed} vs {rhs}")
    lhs_f, rhs_f = float(truncated), float(rhs)
    passed = approx_equal(lhs_f, rhs_f, tol)
    return IdentityReport(
        identity="sigma_partial_truncated", n=f.n, s=s, lhs=lhs_f, rhs=rhs_f,
        mode="approx", passed=passed, abs_discrepancy=abs(lhs_f - rhs_f),
        enumeration="full")


class TruncatedProduct(NamedTuple):
    """Truncated Euler product with its multiplicative tail bound.

    The full (infinite) product lies in [value, value * tail_factor]:
    log of the remaining factors is at most sum_{p>P} p^-s, which the
    integral bound caps by P^(1-s)/(s-1).
    """

    value: float
    tail_factor: float
    primes_used: int


def truncated_global_product(prime_bound: int, s: SValue,
                             table: SpfTable | None = None) -> TruncatedProduct:
    """prod over primes p <= prime_bound of (1 + p^-s), in doubles, ascending."""
    if not s > 1:
        raise ConvergenceError(
            f"the infinite product needs s > 1, got s={s}")
    if prime_bound > PRIME_BOUND_CAP:
        raise ResourceError(
            f"prime bound {prime_bound} exceeds cap {PRIME_BOUND_CAP}")
    if prime_bound < 2:
        raise ConvergenceError(f"prime bound must be >= 2, got {prime_bound}")
    s = float(s)
    primes = primes_up_to(prime_bound, table)
    value = 1.0
    for p in primes.tolist():
        value *= 1.0 + p ** (-s)
    tail_factor = math.exp(prime_bound ** (1.0 - s) / (s - 1.0))
    return TruncatedProduct(value, tail_factor, len(primes))


def zeta_reference(s: float, tol: float = 1e-9) -> float:
    """Riemann zeta by direct series plus a sandwiched integral tail estimate.

    After N = ceil((2 tol)^(-1/s)) terms, the tail sum_{k>N} k^-s lies between
    the integrals from N+1 and from N; taking their midpoint leaves an error
    of at most half the gap, which is below N^-s / 2 <= tol.
    """
    if not s > 1:
        raise ConvergenceError(f"zeta series needs s > 1, got s={s}")
    if tol <= 0:
        raise ConvergenceError(f"tol must be positive, got {tol}")
    s = float(s)
    n_terms = math.ceil((2.0 * tol) ** (-1.0 / s))
    if n_terms > SERIES_CAP:
        raise ResourceError(
            f"series needs {n_terms} terms for tol={tol} at s={s}, "
            f"above cap {SERIES_CAP}")
    head = math.fsum(k ** (-s) for k in range(1, n_terms + 1))
    tail = (n_terms ** (1.0 - s) + (n_terms + 1) ** (1.0 - s)) / (2.0 * (s - 1.0))
    return head + tail
