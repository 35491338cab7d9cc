"""Acceptance suite: every gate criterion at its stated scale and tolerance.

Each test prints one line:  ACCEPTANCE <id> <name>: PASS|FAIL (<seconds>).
Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from divprod import (build_spf_table, density_sum, dineva, dineva_range_check,
                     factorize, gdineva_int_range_check,
                     gdineva_real_range_check, generalized_dineva,
                     identity_pair, mobius_divisor_sum,
                     multiplicative_dirichlet_sum, partial_zeta,
                     quadratic_form, radical, sigma_partial_zeta_check,
                     squarefree_dirichlet_sum, totient,
                     truncated_global_product, verify, weight_table,
                     zeta_reference)
from divprod.arith import divisor_factorizations
from divprod.identities import REGISTRY, LocalWeight
from divprod.selberg import lambda_equivalence_report

from oracles import trial_divisors

SEED = 20260810


@pytest.fixture(scope="module")
def spf_1m():
    return build_spf_table(10**6)


def _report(tag, ok, t0, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" {detail}" if detail else ""
    print(f"\nACCEPTANCE {tag}: {status} ({time.perf_counter() - t0:.2f}s){suffix}")


def test_01_dineva_exact_to_1e6(spf_1m):
    t0 = time.perf_counter()
    result = dineva_range_check(1, 10**6, spf_1m)
    elapsed = time.perf_counter() - t0
    ok = result.failures == 0 and elapsed < 60.0
    _report("01 dineva-1e6-exact", ok, t0,
            f"failures={result.failures} backend={result.backend}")
    assert result.checked == 10**6
    assert result.failures == 0, f"first failure at n={result.first_failure}"
    assert elapsed < 60.0


def test_02_four_forms_exact_to_1e5(spf_1m):
    t0 = time.perf_counter()
    failures = {}
    for s in (-1, 0, 1, 2, 3):
        r = gdineva_int_range_check(1, 10**5, s, spf_1m)
        failures[s] = (r.failures, r.first_failure)
    elapsed = time.perf_counter() - t0
    ok = all(f == 0 for f, _ in failures.values()) and elapsed < 120.0
    _report("02 s-weighted-forms-1e5-exact", ok, t0, f"failures={failures}")
    assert all(f == 0 for f, _ in failures.values()), failures
    assert elapsed < 120.0


def test_03_real_s_spot_suite(spf_1m):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    bad = []
    worst = 0.0
    for _ in range(50):
        s = rng.uniform(-2.0, 4.0)
        r = gdineva_real_range_check(1, 10**4, s, 1e-12, spf_1m)
        worst = max(worst, r.max_rel_err)
        if r.failures:
            bad.append((s, r.first_failure))
    _report("03 real-s-four-forms", not bad, t0, f"max_rel_err={worst:.2e}")
    assert not bad, bad


def test_04_construction_principle(spf_1m):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    facs = [factorize(n, spf_1m) for n in range(1, 1001)]
    checked = 0
    for k in range(100):
        num = rng.choice([i for i in range(-9, 10) if i != 0])
        den = rng.randint(1, 12)
        exp = rng.randint(0, 2)
        w = LocalWeight(f"w{k}", lambda p, s, a=num, b=den, e=exp:
                        Fraction(a, b * p**e))
        for f in facs:
            lhs, rhs = identity_pair(f, w, 0)
            assert lhs == rhs, (k, f.n)
            checked += 1
    _report("04 constructed-identities", True, t0, f"checks={checked}")


def _local_mu(p, j):
    return 1 if j == 0 else (-1 if j == 1 else 0)


def _local_mu2(p, j):
    return 1 if j <= 1 else 0


def _local_phi(p, j):
    return 1 if j == 0 else p ** (j - 1) * (p - 1)


def _local_sigma(p, j):
    return (p ** (j + 1) - 1) // (p - 1)


def test_05_local_factor_formula(spf_1m):
    t0 = time.perf_counter()
    locals_ = {"mu": _local_mu, "mu2": _local_mu2, "phi": _local_phi,
               "sigma": _local_sigma}
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf_1m)
        divs = divisor_factorizations(f)
        values = {name: [] for name in locals_}
        for d, exps in divs:
            for name, loc in locals_.items():
                v = 1
                for (p, _), j in zip(f.factors, exps):
                    v *= loc(p, j)
                values[name].append((d, v))
        for s in (0, 1, 2):
            n_s = n**s
            for name, loc in locals_.items():
                brute = sum(v * (n // d) ** s for d, v in values[name])
                got = multiplicative_dirichlet_sum(f, loc, s)
                assert got == Fraction(brute, n_s), (name, n, s)
    _report("05 local-factor-products", True, t0)


def test_06_mobius_partial_zeta_inverse(spf_1m):
    t0 = time.perf_counter()
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf_1m)
        for s in (1, 2, 3):
            assert mobius_divisor_sum(f, s) == 1 / partial_zeta(f, s), (n, s)
    _report("06 mobius-inverse-zeta", True, t0)


def test_07_sigma_partial_zeta(spf_1m):
    t0 = time.perf_counter()
    for n in range(1, 10**3 + 1):
        f = factorize(n, spf_1m)
        for s in (2, 3):
            r = verify("sigma_partial", n, s=s, table=spf_1m)
            assert r.passed and r.mode == "exact", (n, s)
    for n in range(1, 201):
        f = factorize(n, spf_1m)
        for s in (2, 3):
            r = sigma_partial_zeta_check(f, s, tol=1e-9)
            assert r.passed, (n, s, r.abs_discrepancy)
    _report("07 sigma-zeta-factors", True, t0)


def test_08_truncated_global_product():
    t0 = time.perf_counter()
    product = truncated_global_product(10**4, 2)
    reference = zeta_reference(2.0, 1e-9) / zeta_reference(4.0, 1e-9)
    elapsed = time.perf_counter() - t0
    closed = 15.0 / math.pi**2
    ok = (abs(reference - closed) < 5e-9
          and abs(product.value - reference) < 1e-3
          and elapsed < 5.0)
    _report("08 global-euler-product", ok, t0,
            f"diff={abs(product.value - reference):.2e}")
    assert abs(reference - closed) < 5e-9
    assert abs(product.value - reference) < 1e-3
    assert elapsed < 5.0


def test_09_selberg_equivalence(spf_1m):
    t0 = time.perf_counter()
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf_1m)
        for s in (0, 1, 2):
            rep = lambda_equivalence_report(f, s)
            assert rep.passed and rep.mode == "exact", (n, s)
            tab = weight_table(f, s)
            assert tab.lambdas[1] == 1
            assert all(abs(lam) <= 1 for lam in tab.lambdas.values())
    _report("09 selberg-ratio-vs-product", True, t0)


def test_09_selberg_weight_decay_in_s(spf_1m):
    # |lambda_d(s1)| > |lambda_d(s2)| for s1 < s2 and every squarefree d > 1.
    # Note h_s(p) = 1/((p-1)p^s) strictly decreases in s, so each factor
    # 1/(1 + h_s(p)) of |lambda_d| strictly increases toward 1; the first
    # comparison below is 1/2 > 2/3 at (n=6, d=2, s=0 vs 1).
    t0 = time.perf_counter()
    violations = []
    for n in (6, 30, 210, 2310, 9240):
        tables = {s: weight_table(factorize(n, spf_1m), s) for s in (0, 1, 2)}
        for d in tables[0].lambdas:
            if d == 1:
                continue
            for s1, s2 in ((0, 1), (1, 2), (0, 2)):
                if not abs(tables[s1].lambdas[d]) > abs(tables[s2].lambdas[d]):
                    violations.append((n, d, s1, s2))
    _report("09 selberg-weight-decay-in-s", not violations, t0,
            f"violations={len(violations)}")
    assert not violations, (
        f"|lambda_d| increases with s (h_s(p) -> 0 makes each factor "
        f"1/(1+h) -> 1); first counterexamples: {violations[:3]}")


def test_10_density_matches_weighted_totient_sum(spf_1m):
    t0 = time.perf_counter()
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf_1m)
        for s in (0, 1, 2):
            assert density_sum(f, s) == generalized_dineva(f, s, form="product")
    _report("10 sieve-density-consistency", True, t0)


def _naive_quadratic_form(x_bound, r_bound, lambdas):
    total = Fraction(0)
    for m in range(1, x_bound + 1):
        inner = Fraction(0)
        for d in trial_divisors(m):
            if d <= r_bound and d in lambdas:
                inner += lambdas[d]
        total += inner * inner
    return total


def test_11_quadratic_form_oracle():
    t0 = time.perf_counter()
    t1 = weight_table(factorize(1), 0)
    assert quadratic_form(1, 1, t1) == 1
    t2 = weight_table(factorize(2), 0)
    assert t2.lambdas == {1: 1, 2: Fraction(-1, 2)}
    assert quadratic_form(4, 2, t2) == Fraction(5, 2)
    for n, s, r_bound in ((6, 0, 3), (30, 1, 30), (210, 0, 14), (2310, 2, 2310)):
        tab = weight_table(factorize(n), s)
        got = quadratic_form(1000, r_bound, tab)
        assert got == _naive_quadratic_form(1000, r_bound, tab.lambdas), (n, s)
    _report("11 quadratic-form-exact", True, t0)


def test_12_multiplicativity_and_radical_invariance(spf_1m):
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    from divprod import mobius, sigma
    lhs_cases = []
    for name, entry in REGISTRY.items():
        s = 2 if name == "sigma_partial" else (1 if entry.uses_s else None)
        lhs_cases.append((name, entry.lhs, s))
    pairs = 0
    while pairs < 1000:
        a, b = rng.randint(1, 1000), rng.randint(1, 1000)
        if math.gcd(a, b) != 1:
            continue
        fa = factorize(a, spf_1m)
        fb = factorize(b, spf_1m)
        fab = factorize(a * b, spf_1m)
        assert totient(fab) == totient(fa) * totient(fb)
        assert sigma(fab) == sigma(fa) * sigma(fb)
        assert mobius(fab) == mobius(fa) * mobius(fb)
        assert partial_zeta(fab, 2) == partial_zeta(fa, 2) * partial_zeta(fb, 2)
        for name, lhs, s in lhs_cases:
            assert lhs(fab, s) == lhs(fa, s) * lhs(fb, s), (name, a, b)
        pairs += 1
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf_1m)
        fr = factorize(radical(f), spf_1m)
        assert dineva(f) == dineva(fr)
        assert generalized_dineva(f, 1, "divisor_sum") \
            == generalized_dineva(fr, 1, "divisor_sum")
        assert mobius_divisor_sum(f, 1) == mobius_divisor_sum(fr, 1)
        assert squarefree_dirichlet_sum(f, 1) == squarefree_dirichlet_sum(fr, 1)
        assert density_sum(f, 1) == density_sum(fr, 1)
    _report("12 multiplicativity-suite", True, t0, f"pairs={pairs}")
