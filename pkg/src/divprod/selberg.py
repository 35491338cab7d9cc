"""Selberg sieve weights: the density sums J over squarefree divisors, the
optimal coefficients lambda_d in ratio and product form, and the truncated
quadratic form they are built to control.

The ratio form lambda_d = mu(d) J_{n/d} / J_n lives on the squarefree
divisor lattice, so a non-squarefree modulus n is handled through its
radical; on the radical the two forms agree exactly, which is the content
the equivalence checks exercise.  No minimality of the weights is asserted
anywhere: the quadratic form is evaluated, not optimized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Factorization, factorize, mobius, squarefree_divisors
from .errors import ConsistencyError, DomainError
from .identities import IdentityReport, _subset_sum
from .values import (SValue, Value, abs_difference, approx_equal, inv_pow,
                     is_exact, render_value)


def h_weight(p: int, s: SValue) -> Value:
    """The per-prime sieve density h_s(p) = 1/((p-1) p^s)."""
    if p < 2:
        raise DomainError(f"p must be at least 2, got {p}")
    return inv_pow(p, s) / (p - 1)


def density_sum(f: Factorization, s: SValue) -> Value:
    """J_n: sum over squarefree d|n of prod_{p|d} h_s(p), by subset enumeration.

    Multiplicative in n with local factor 1 + h_s(p), so it coincides with
    the s-weighted totient sum's product form; the test suite checks the two
    against each other.
    """
    return _subset_sum([h_weight(p, s) for p in f.primes])


def _prime_subset(d: int, primes: tuple[int, ...]) -> tuple[int, ...]:
    """Distinct primes of a squarefree d whose primes all lie in ``primes``."""
    m = d
    sub = []
    for p in primes:
        if m % p == 0:
            m //= p
            sub.append(p)
            if m % p == 0:
                raise DomainError(f"d={d} is not squarefree")
    if m != 1:
        raise DomainError(f"d={d} does not divide the modulus")
    return tuple(sub)


def lambda_ratio(d: int, f: Factorization, s: SValue) -> Value:
    """mu(d) J_{n'/d} / J_{n'} on the radical lattice n' = rad(n).

    d must be a squarefree divisor of n.  Both J values are evaluated by
    subset enumeration.
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    sub = _prime_subset(d, f.primes)
    complement = [p for p in f.primes if p not in sub]
    j_top = _subset_sum([h_weight(p, s) for p in complement])
    j_all = _subset_sum([h_weight(p, s) for p in f.primes])
    sign = -1 if len(sub) % 2 else 1
    return sign * j_top / j_all


def lambda_product(d: int, s: SValue) -> Value:
    """mu(d) prod over p|d of 1/(1 + h_s(p)); d must be squarefree."""
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    fd = factorize(d)
    if any(a > 1 for _, a in fd.factors):
        raise DomainError(f"d={d} is not squarefree")
    out: Value = Fraction(1)
    for p in fd.primes:
        out = out / (1 + h_weight(p, s))
    return mobius(fd) * out


@dataclass(frozen=True)
class SieveWeights:
    """lambda_d over the squarefree divisors of n, with the J values per divisor."""

    n: int
    s: SValue
    J: dict[int, Value]
    lambdas: dict[int, Value]

    @property
    def radical(self) -> int:
        return max(self.J)

    def to_dict(self) -> dict:
        rad = self.radical
        rows = []
        for d in sorted(self.lambdas):
            lam = self.lambdas[d]
            rows.append({
                "d": d,
                "mu": 1 if lam > 0 else -1,  # sign(lambda_d) = mu(d), lambda never 0
                "J_over_d": render_value(self.J[rad // d]),
                "lambda": render_value(lam),
            })
        s_mode = "integer" if isinstance(self.s, int) else "real"
        s_value = str(self.s) if isinstance(self.s, int) else repr(float(self.s))
        return {
            "n": self.n,
            "s_mode": s_mode,
            "s_value": s_value,
            "J_n": render_value(self.J[rad]),
            "weights": rows,
        }


def weight_table(f: Factorization, s: SValue) -> SieveWeights:
    """All lambda_d for squarefree d | n, computed by the ratio form.

    J values are filled bottom-up over the divisor lattice (J_{mp} = J_m
    (1 + h(p))), costing 2^omega multiplications instead of repeated subset
    sums.  Every entry is cross-checked against the product form; a mismatch
    means a broken invariant, not bad input.
    """
    entries: list[tuple[int, Value, int]] = [(1, Fraction(1), 0)]
    for p in f.primes:
        h = h_weight(p, s)
        entries += [(d * p, jd * (1 + h), w + 1) for d, jd, w in entries]
    j_map = {d: jd for d, jd, _ in entries}
    rad = 1
    for p in f.primes:
        rad *= p
    j_all = j_map[rad]
    lambdas: dict[int, Value] = {}
    for d, _, w in entries:
        sign = -1 if w % 2 else 1
        lam = sign * j_map[rad // d] / j_all
        check = lambda_product(d, s)
        agree = lam == check if (is_exact(lam) and is_exact(check)) \
            else approx_equal(lam, check, 1e-12)
        if not agree:
            raise ConsistencyError(
                f"lambda forms disagree at d={d}, n={f.n}, s={s}: "
                f"{lam!r} vs {check!r}")
        lambdas[d] = lam
    return SieveWeights(n=f.n, s=s, J=j_map, lambdas=lambdas)


def lambda_equivalence_report(f: Factorization, s: SValue,
                              tol: float = 1e-12) -> IdentityReport:
    """Compare ratio-form and product-form lambda_d across all squarefree d | n.

    The report carries the worst-agreeing pair (the pair at d = rad(n) when
    everything matches); passed requires every divisor to agree.
    """
    pairs = []
    for d in squarefree_divisors(f):
        pairs.append((d, lambda_ratio(d, f, s), lambda_product(d, s)))
    exact = all(is_exact(lr) and is_exact(lp) for _, lr, lp in pairs)
    all_ok = True
    worst = pairs[-1]  # the most composite divisor, rad(n)
    worst_gap = -1.0
    for d, lr, lp in pairs:
        ok = lr == lp if exact else approx_equal(lr, lp, tol)
        if not ok:
            all_ok = False
            gap = abs_difference(lr, lp)
            if gap > worst_gap:
                worst_gap = gap
                worst = (d, lr, lp)
    _, lhs, rhs = worst
    return IdentityReport(
        identity="selberg_lambda_equiv", n=f.n, s=s, lhs=lhs, rhs=rhs,
        mode="exact" if exact else "approx", passed=all_ok,
        abs_discrepancy=0.0 if (exact and all_ok) else abs_difference(lhs, rhs),
        enumeration="squarefree")


def quadratic_form(x_bound: int, r_bound: int, weights: SieveWeights) -> Value:
    """Q = sum over m <= x_bound of (sum of lambda_d for d | m, d <= r_bound)^2.

    Divisors of m outside the table's index set contribute 0.  Computed by a
    sieve pass (each indexed d adds its weight to all multiples), exact when
    the weights are exact.
    """
    if x_bound < 1 or r_bound < 1:
        raise DomainError(
            f"bounds must be positive, got X={x_bound}, R={r_bound}")
    inner: list[Value] = [Fraction(0)] * (x_bound + 1)
    for d, lam in weights.lambdas.items():
        if d <= r_bound:
            for m in range(d, x_bound + 1, d):
                inner[m] += lam
    total: Value = 0
    for m in range(1, x_bound + 1):
        total += inner[m] * inner[m]
    return total


def weight_decay_profile(f: Factorization,
                         s_values: list[SValue]) -> list[tuple[int, SValue, Value]]:
    """(d, s, lambda_d) over all squarefree d | n and every requested s.

    Tabulates how each fixed weight moves with s; rows are grouped by d in
    ascending order, s in the order given.
    """
    if not s_values:
        return []
    tables = [weight_table(f, s) for s in s_values]
    rows: list[tuple[int, SValue, Value]] = []
    for d in sorted(tables[0].lambdas):
        for s, tab in zip(s_values, tables):
            rows.append((d, s, tab.lambdas[d]))
    return rows
