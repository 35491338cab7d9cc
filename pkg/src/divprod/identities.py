"""The identity engine: divisor-sum and squarefree-Euler-product evaluators,
the generic sum/product construction for weights g(p), the named identities,
and the verification harness.

Every verifier computes its two sides through structurally different code:
the sum side by explicit divisor (or squarefree-subset) enumeration, the
closed side by a per-prime product.  A single bug therefore cannot validate
itself.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from .arith import (Factorization, SpfTable, divisor_factorizations, divisors,
                    factorize, totient)
from .errors import DomainError, SingularityError, UnknownIdentityError
from .values import (DEFAULT_REL_TOL, SValue, Value, abs_difference,
                     approx_equal, inv_pow, is_exact, render_value)


@dataclass(frozen=True)
class LocalWeight:
    """A per-prime weight g(p), evaluated under an exponent parameter s.

    Defines the identity
        prod_{p|n} (1 + g(p))  ==  sum over squarefree d|n of prod_{p|d} g(p).
    """

    name: str
    g: Callable[[int, SValue], Value]
    description: str = ""


BUILTIN_WEIGHTS: dict[str, LocalWeight] = {
    "inv_totient": LocalWeight(
        "inv_totient", lambda p, s: Fraction(1, p - 1),
        "1/(p-1); squarefree sum of 1/phi(d)"),
    "inv_prime": LocalWeight(
        "inv_prime", lambda p, s: Fraction(1, p),
        "1/p; squarefree sum of 1/d"),
    "prime_power": LocalWeight(
        "prime_power", lambda p, s: inv_pow(p, s),
        "p^-s; squarefree sum of 1/d^s"),
    "inv_totient_power": LocalWeight(
        "inv_totient_power", lambda p, s: inv_pow(p, s) / (p - 1),
        "1/((p-1)p^s); squarefree sum of 1/(phi(d) d^s)"),
}


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of verifying one identity at one (n, s)."""

    identity: str
    n: int
    s: SValue | None
    lhs: Value
    rhs: Value
    mode: str               # "exact" | "approx"
    passed: bool
    abs_discrepancy: float
    enumeration: str        # "squarefree" | "full"

    @property
    def s_mode(self) -> str:
        if self.s is None:
            return "none"
        return "integer" if isinstance(self.s, int) else "real"

    @property
    def s_value_str(self) -> str:
        if self.s is None:
            return ""
        return str(self.s) if isinstance(self.s, int) else repr(float(self.s))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "s_mode": self.s_mode,
            "s_value": self.s_value_str,
            "lhs": render_value(self.lhs),
            "rhs": render_value(self.rhs),
            "mode": self.mode,
            "passed": self.passed,
            "abs_discrepancy": self.abs_discrepancy,
            "enumeration": self.enumeration,
        }


# ---------------------------------------------------------------------------
# Generic evaluators
# ---------------------------------------------------------------------------

def divisor_sum(f: Factorization, numerator: Callable[[int], Value],
                s: SValue = 0) -> Value:
    """sum over all divisors d of n of numerator(d) * d^-s.

    The full-divisor path; slower than the squarefree shortcuts but makes no
    assumption about the weight, which is what an oracle needs.
    """
    total: Value = 0
    for d in divisors(f):
        total += numerator(d) * inv_pow(d, s)
    return total


def squarefree_euler_product(f: Factorization, g: LocalWeight,
                             s: SValue = 0) -> Value:
    """prod over p|n of (1 + g(p)); empty product is 1."""
    out: Value = Fraction(1)
    for p in f.primes:
        out = out * (1 + g.g(p, s))
    return out


def _subset_sum(values: list[Value]) -> Value:
    """sum over all subsets of the product of chosen values (1 for the empty set)."""
    terms: list[Value] = [Fraction(1)]
    for v in values:
        terms = terms + [t * v for t in terms]
    total: Value = 0
    for t in terms:
        total += t
    return total


def identity_pair(f: Factorization, g: LocalWeight,
                  s: SValue = 0) -> tuple[Value, Value]:
    """(sum side, product side) of the constructed identity for weight g.

    Sum side enumerates the squarefree divisors as subsets of the distinct
    primes; product side multiplies the closed per-prime factors.
    """
    gv = [g.g(p, s) for p in f.primes]
    sum_side = _subset_sum(gv)
    prod_side: Value = Fraction(1)
    for v in gv:
        prod_side = prod_side * (1 + v)
    return sum_side, prod_side


# ---------------------------------------------------------------------------
# Named identities
# ---------------------------------------------------------------------------

def dineva(f: Factorization) -> Value:
    """sum over squarefree d|n of 1/phi(d), by subset enumeration.

    Equals n/phi(n).  phi(d) comes straight from the chosen prime subset
    (prod of p-1), never from refactorizing d: integer numerators over the
    common denominator prod (p-1).
    """
    den = 1
    terms = [1]
    for p in f.primes:
        b = p - 1
        den *= b
        terms += [t * b for t in terms]
    return Fraction(sum(terms), den)


GDINEVA_FORMS = ("divisor_sum", "product", "alternate", "zeta_local")


def generalized_dineva(f: Factorization, s: SValue,
                       form: str = "product") -> Value:
    """The s-weighted squarefree totient sum, sum_{d|n} mu^2(d)/(phi(d) d^s).

    Four equivalent routes:
      divisor_sum  enumerates squarefree divisors,
      product      multiplies (1 + 1/((p-1)p^s)),
      alternate    multiplies (1 - 1/p + p^-(s+1)) / (1 - 1/p),
      zeta_local   multiplies (1 + zeta_p(1) / p^(s+1)), zeta_p(1) = p/(p-1).
    """
    if form == "divisor_sum":
        return _subset_sum([inv_pow(p, s) / (p - 1) for p in f.primes])
    out: Value = Fraction(1)
    if form == "product":
        for p in f.primes:
            out = out * (1 + inv_pow(p, s) / (p - 1))
    elif form == "alternate":
        for p in f.primes:
            inv_p = inv_pow(p, 1)
            out = out * (1 - inv_p + inv_pow(p, s + 1)) / (1 - inv_p)
    elif form == "zeta_local":
        for p in f.primes:
            zeta_p1 = Fraction(p, p - 1)
            out = out * (1 + zeta_p1 * inv_pow(p, s + 1))
    else:
        raise DomainError(f"unknown form {form!r}, expected one of {GDINEVA_FORMS}")
    return out


def mobius_divisor_sum(f: Factorization, s: SValue) -> Value:
    """sum_{d|n} mu(d)/d^s by signed subset enumeration; equals prod (1 - p^-s)."""
    return _subset_sum([-inv_pow(p, s) for p in f.primes])


def mobius_sum_closed(f: Factorization, s: SValue) -> Value:
    """prod over p|n of (1 - p^-s); 0 at s=0 for n>1, by design not an error."""
    out: Value = Fraction(1)
    for p in f.primes:
        out = out * (1 - inv_pow(p, s))
    return out


def squarefree_dirichlet_sum(f: Factorization, s: SValue) -> Value:
    """sum_{d|n} mu^2(d)/d^s by subset enumeration; equals prod (1 + p^-s)."""
    return _subset_sum([inv_pow(p, s) for p in f.primes])


def squarefree_sum_closed(f: Factorization, s: SValue) -> Value:
    out: Value = Fraction(1)
    for p in f.primes:
        out = out * (1 + inv_pow(p, s))
    return out


def multiplicative_dirichlet_sum(f: Factorization,
                                 f_local: Callable[[int, int], Value],
                                 s: SValue) -> Value:
    """Local-factor product for a multiplicative f given by f_local(p, j) = f(p^j):

        sum_{d|n} f(d)/d^s  =  prod over p^k || n of sum_{j=0..k} f(p^j)/p^(js)

    computed from the right-hand side.  The brute-force left-hand sum is the
    oracle the tests compare against.
    """
    out: Value = Fraction(1)
    for p, k in f.factors:
        if f_local(p, 0) != 1:
            raise DomainError(
                f"f_local({p}, 0) = {f_local(p, 0)!r}, multiplicative "
                "normalization requires f(1) = 1")
        local: Value = 0
        for j in range(k + 1):
            local += f_local(p, j) * inv_pow(p**j, s)
        out = out * local
    return out


def totient_sum_check(f: Factorization) -> int:
    """sum over all divisors d of n of phi(d), by full enumeration; equals n."""
    total = 0
    for _, exps in divisor_factorizations(f):
        phi = 1
        for (p, _), j in zip(f.factors, exps):
            if j > 0:
                phi *= p ** (j - 1) * (p - 1)
        total += phi
    return total


# ---------------------------------------------------------------------------
# Registry and verification harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityDef:
    name: str
    uses_s: bool
    enumeration: str
    lhs: Callable[[Factorization, SValue | None], Value]
    rhs: Callable[[Factorization, SValue | None], Value]
    description: str = ""
    s_check: Callable[[SValue], None] | None = None


def _sigma_partial_lhs(f: Factorization, s: SValue | None) -> Value:
    from . import zeta
    out: Value = Fraction(1)
    for p in f.primes:
        out = out * zeta.sigma_local_factor(p, s, mode="closed")
    return out


def _sigma_partial_rhs(f: Factorization, s: SValue | None) -> Value:
    from . import zeta
    return zeta.partial_zeta(f, s) * zeta.partial_zeta(f, s - 1)


def _sigma_partial_s_check(s: SValue) -> None:
    if s == 0 or s == 1:
        raise SingularityError(
            f"sigma local factors are singular at s={s} (need s not in {{0, 1}})")


REGISTRY: dict[str, IdentityDef] = {
    "dineva": IdentityDef(
        "dineva", uses_s=False, enumeration="squarefree",
        lhs=lambda f, s: dineva(f),
        rhs=lambda f, s: Fraction(f.n, totient(f)),
        description="sum mu^2(d)/phi(d) over d|n == n/phi(n)"),
    "generalized_dineva": IdentityDef(
        "generalized_dineva", uses_s=True, enumeration="squarefree",
        lhs=lambda f, s: generalized_dineva(f, s, form="divisor_sum"),
        rhs=lambda f, s: generalized_dineva(f, s, form="product"),
        description="sum mu^2(d)/(phi(d) d^s) == prod (1 + 1/((p-1)p^s))"),
    "mobius_sum": IdentityDef(
        "mobius_sum", uses_s=True, enumeration="squarefree",
        lhs=mobius_divisor_sum,
        rhs=mobius_sum_closed,
        description="sum mu(d)/d^s == prod (1 - p^-s)"),
    "squarefree_sum": IdentityDef(
        "squarefree_sum", uses_s=True, enumeration="squarefree",
        lhs=squarefree_dirichlet_sum,
        rhs=squarefree_sum_closed,
        description="sum mu^2(d)/d^s == prod (1 + p^-s)"),
    "totient_sum": IdentityDef(
        "totient_sum", uses_s=False, enumeration="full",
        lhs=lambda f, s: totient_sum_check(f),
        rhs=lambda f, s: f.n,
        description="sum phi(d) over d|n == n"),
    "sigma_partial": IdentityDef(
        "sigma_partial", uses_s=True, enumeration="full",
        lhs=_sigma_partial_lhs,
        rhs=_sigma_partial_rhs,
        description="prod of closed sigma local factors == zeta_n(s) zeta_n(s-1)",
        s_check=_sigma_partial_s_check),
}

#: Names accepted by verify(); selberg_lambda_equiv and custom are handled
#: outside the lhs/rhs template.
IDENTITY_NAMES = tuple(REGISTRY) + ("selberg_lambda_equiv", "custom")


def _build_report(name: str, n: int, s: SValue | None, lhs: Value, rhs: Value,
                  tol: float, enumeration: str) -> IdentityReport:
    exact = is_exact(lhs) and is_exact(rhs)
    if exact:
        passed = lhs == rhs
        mode = "exact"
    else:
        passed = approx_equal(lhs, rhs, tol)
        mode = "approx"
    return IdentityReport(
        identity=name, n=n, s=s, lhs=lhs, rhs=rhs, mode=mode, passed=passed,
        abs_discrepancy=0.0 if (exact and passed) else abs_difference(lhs, rhs),
        enumeration=enumeration)


def verify(identity: str, n: int, s: SValue | None = None,
           tol: float = DEFAULT_REL_TOL, table: SpfTable | None = None,
           weight: LocalWeight | None = None) -> IdentityReport:
    """Evaluate both sides of a registered identity at (n, s) and report.

    Integer (or absent) s makes the check exact and tol is ignored; real s
    compares within tol.  ``custom`` verifies the constructed identity for
    the supplied LocalWeight; ``selberg_lambda_equiv`` compares the ratio and
    product forms of the sieve weights across every squarefree divisor and
    reports the worst pair.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if identity == "selberg_lambda_equiv":
        from . import selberg
        return selberg.lambda_equivalence_report(
            factorize(n, table), 0 if s is None else s, tol)
    if identity == "custom":
        if weight is None:
            raise DomainError("identity 'custom' requires a LocalWeight")
        f = factorize(n, table)
        lhs, rhs = identity_pair(f, weight, 0 if s is None else s)
        return _build_report(f"custom:{weight.name}", n, s, lhs, rhs, tol,
                             "squarefree")
    entry = REGISTRY.get(identity)
    if entry is None:
        raise UnknownIdentityError(
            f"unknown identity {identity!r}; known: {', '.join(IDENTITY_NAMES)}")
    if entry.uses_s:
        if s is None:
            raise DomainError(f"identity {identity!r} requires s")
        if entry.s_check is not None:
            entry.s_check(s)
    f = factorize(n, table)
    lhs = entry.lhs(f, s)
    rhs = entry.rhs(f, s)
    return _build_report(identity, n, s, lhs, rhs, tol, entry.enumeration)


def verify_range(identity: str, lo: int, hi: int, s: SValue | None = None,
                 tol: float = DEFAULT_REL_TOL, table: SpfTable | None = None,
                 weight: LocalWeight | None = None) -> Iterator[IdentityReport]:
    """Reports for every n in lo..hi, ascending."""
    if lo < 1 or hi < lo:
        raise DomainError(f"invalid range [{lo}, {hi}]")
    for n in range(lo, hi + 1):
        yield verify(identity, n, s=s, tol=tol, table=table, weight=weight)
