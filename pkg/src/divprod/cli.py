"""Command-line front end.

Subcommands: eval (one quantity at one n), verify (identity over an n-range,
one report per n), zeta (truncated global Euler product against the series
reference), sieve (Selberg weight tables, quadratic form, decay profile).

Exit codes: 0 success / all checks passed, 1 verification failure, 2 usage or
domain error (nothing written in that case), 3 internal consistency error.
Output is deterministic: identical configuration (including --seed) produces
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .arith import (DEFAULT_SIEVE_LIMIT, SpfTable, build_spf_table, factorize,
                    mobius, radical, sigma, totient)
from .errors import ConsistencyError, DomainError
from .identities import (GDINEVA_FORMS, IDENTITY_NAMES, REGISTRY,
                         IdentityReport, LocalWeight, dineva,
                         generalized_dineva, mobius_divisor_sum,
                         squarefree_dirichlet_sum, totient_sum_check,
                         verify_range)
from .selberg import density_sum, quadratic_form, weight_decay_profile, weight_table
from .values import SValue, is_exact, render_value
from .zeta import partial_zeta, truncated_global_product, zeta_reference

SCHEMA_VERSION = 1

VERIFY_CSV_HEADER = "identity,n,s_mode,s_value,lhs,rhs,mode,passed,abs_discrepancy"

#: eval quantities: name -> (needs_s, function(f, s))
EVAL_QUANTITIES = {
    "dineva": (False, lambda f, s: dineva(f)),
    "gdineva": (True, lambda f, s: generalized_dineva(f, s, form="product")),
    "mobius_sum": (True, mobius_divisor_sum),
    "squarefree_sum": (True, squarefree_dirichlet_sum),
    "totient_sum": (False, lambda f, s: totient_sum_check(f)),
    "zeta_n": (True, partial_zeta),
    "J": (True, density_sum),
    "phi": (False, lambda f, s: totient(f)),
    "mu": (False, lambda f, s: mobius(f)),
    "sigma": (False, lambda f, s: sigma(f)),
    "radical": (False, lambda f, s: radical(f)),
}


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--out", metavar="FILE", default=None)
    sub.add_argument("--tol", type=float, default=1e-12)
    sub.add_argument("--parallelism", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)


def _s_flags(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group()
    grp.add_argument("--s-int", type=int, default=None,
                     help="integer exponent: fully exact evaluation")
    grp.add_argument("--s-real", type=float, default=None,
                     help="real exponent: double-precision evaluation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divprod",
        description="evaluate and verify divisor-sum / Euler-product identities")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate one quantity at one n")
    p_eval.add_argument("quantity", choices=sorted(EVAL_QUANTITIES))
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--form", choices=GDINEVA_FORMS, default="product",
                        help="route for gdineva (all four agree)")
    _s_flags(p_eval)
    _common_flags(p_eval)

    p_verify = subs.add_parser("verify", help="verify an identity over a range")
    p_verify.add_argument("--identity", required=True,
                          choices=sorted(IDENTITY_NAMES + ("gdineva",)),
                          help="gdineva is shorthand for generalized_dineva")
    grp = p_verify.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int, default=None)
    grp.add_argument("--n-range", metavar="LO:HI", default=None)
    p_verify.add_argument("--K", type=int, default=None, dest="depth",
                          help="sigma_partial only: also run the truncated "
                               "local factors at this depth")
    p_verify.add_argument("--random-weights", type=int, default=0,
                          help="custom only: number of seeded random weights")
    _s_flags(p_verify)
    _common_flags(p_verify)

    p_zeta = subs.add_parser("zeta", help="truncated global product vs zeta ratio")
    p_zeta.add_argument("--s", type=float, required=True)
    p_zeta.add_argument("--prime-bound", type=int, default=10**4)
    _common_flags(p_zeta)

    p_sieve = subs.add_parser("sieve", help="Selberg weight table tools")
    p_sieve.add_argument("--n", type=int, required=True)
    p_sieve.add_argument("--Q", type=int, nargs=2, metavar=("X", "R"),
                         default=None, help="also evaluate the quadratic form")
    p_sieve.add_argument("--decay-s", default=None, metavar="S1,S2,...",
                         help="tabulate lambda_d across these integer s")
    _s_flags(p_sieve)
    _common_flags(p_sieve)

    return parser


def _resolve_s(args) -> SValue | None:
    if args.s_int is not None:
        return args.s_int
    if args.s_real is not None:
        return float(args.s_real)
    return None


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise DomainError(f"bad range {text!r}, expected LO:HI") from exc
    if lo < 1 or hi < lo:
        raise DomainError(f"invalid range [{lo}, {hi}]: need 1 <= lo <= hi")
    return lo, hi


class _Sink:
    """Buffers or streams lines to stdout or --out, then reports byte count."""

    def __init__(self, path: str | None):
        self._path = path
        self._lines: list[str] = []

    def line(self, text: str) -> None:
        self._lines.append(text)

    def flush(self) -> None:
        payload = "\n".join(self._lines) + ("\n" if self._lines else "")
        if self._path is None:
            sys.stdout.write(payload)
        else:
            with open(self._path, "w", encoding="utf-8") as fh:
                fh.write(payload)


def _emit_json(sink: _Sink, doc: dict) -> None:
    sink.line(json.dumps(doc, indent=2))


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _cmd_eval(args) -> int:
    needs_s, fn = EVAL_QUANTITIES[args.quantity]
    s = _resolve_s(args)
    if needs_s and s is None:
        raise DomainError(f"quantity {args.quantity!r} requires --s-int or --s-real")
    if args.n < 1:
        raise DomainError(f"--n must be positive, got {args.n}")
    f = factorize(args.n)
    if args.quantity == "gdineva":
        value = generalized_dineva(f, s, form=args.form)
    else:
        value = fn(f, s)
    mode = "exact" if is_exact(value) else "approx"
    sink = _Sink(args.out)
    if args.output == "text":
        sink.line(f"{render_value(value)} ({mode})")
    elif args.output == "json":
        _emit_json(sink, {
            "schema_version": SCHEMA_VERSION,
            "command": "eval",
            "quantity": args.quantity,
            "n": args.n,
            "s_mode": _s_mode(s),
            "s_value": _s_value(s),
            "value": render_value(value),
            "mode": mode,
        })
    else:
        sink.line("quantity,n,s_mode,s_value,value,mode")
        sink.line(f"{args.quantity},{args.n},{_s_mode(s)},{_s_value(s)},"
                  f"{render_value(value)},{mode}")
    sink.flush()
    return 0


def _s_mode(s: SValue | None) -> str:
    if s is None:
        return "none"
    return "integer" if isinstance(s, int) else "real"


def _s_value(s: SValue | None) -> str:
    if s is None:
        return ""
    return str(s) if isinstance(s, int) else repr(float(s))


def _default_table(hi: int, count: int = 1) -> SpfTable | None:
    # A sieve only pays off for bulk work; isolated n goes through the
    # direct factoring path.
    if count < 64 or hi < 2:
        return None
    return build_spf_table(min(hi, DEFAULT_SIEVE_LIMIT))


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

_WORKER_TABLE: SpfTable | None = None


def _worker_init(limit: int) -> None:
    global _WORKER_TABLE
    _WORKER_TABLE = build_spf_table(limit) if limit >= 2 else None


def _verify_chunk(params: tuple) -> list[IdentityReport]:
    identity, lo, hi, s, tol, depth = params
    if identity == "sigma_partial" and depth is not None:
        from .zeta import sigma_partial_zeta_check
        return [sigma_partial_zeta_check(factorize(n, _WORKER_TABLE), s,
                                         depth=depth, tol=tol)
                for n in range(lo, hi + 1)]
    return list(verify_range(identity, lo, hi, s=s, tol=tol,
                             table=_WORKER_TABLE))


def _chunk_ranges(lo: int, hi: int, chunks: int) -> list[tuple[int, int]]:
    total = hi - lo + 1
    chunks = max(1, min(chunks, total))
    size = (total + chunks - 1) // chunks
    out = []
    start = lo
    while start <= hi:
        out.append((start, min(start + size - 1, hi)))
        start += size
    return out


def _random_weight(index: int, rng: random.Random) -> LocalWeight:
    num = rng.choice([i for i in range(-9, 10) if i != 0])
    den = rng.randint(1, 12)
    exp = rng.randint(0, 2)
    return LocalWeight(
        name=f"w{index}",
        g=lambda p, s, a=num, b=den, e=exp: Fraction(a, b * p**e),
        description=f"g(p) = {num}/({den} p^{exp})")


def _validate_verify(args, s: SValue | None) -> None:
    entry = REGISTRY.get(args.identity)
    if entry is not None and entry.uses_s:
        if s is None:
            raise DomainError(f"identity {args.identity!r} requires --s-int/--s-real")
        if entry.s_check is not None:
            entry.s_check(s)
    if args.identity == "custom" and args.random_weights < 1:
        raise DomainError("identity 'custom' requires --random-weights >= 1")
    if args.depth is not None:
        if args.identity != "sigma_partial":
            raise DomainError("--K applies only to --identity sigma_partial")
        if not s > 1:
            raise DomainError(f"truncated sigma check needs s > 1, got s={s}")
    if args.parallelism < 1:
        raise DomainError(f"--parallelism must be >= 1, got {args.parallelism}")
    if args.tol <= 0:
        raise DomainError(f"--tol must be positive, got {args.tol}")


def _cmd_verify(args) -> int:
    if args.identity == "gdineva":
        args.identity = "generalized_dineva"
    s = _resolve_s(args)
    if args.n is not None:
        if args.n < 1:
            raise DomainError(f"--n must be positive, got {args.n}")
        lo, hi = args.n, args.n
    else:
        lo, hi = _parse_range(args.n_range)
    _validate_verify(args, s)

    reports: list[IdentityReport] = []
    if args.identity == "custom":
        rng = random.Random(args.seed)
        weights = [_random_weight(k, rng) for k in range(args.random_weights)]
        table = _default_table(hi, hi - lo + 1)
        for w in weights:
            reports.extend(verify_range("custom", lo, hi, s=0 if s is None else s,
                                        tol=args.tol, table=table, weight=w))
    elif args.parallelism == 1:
        limit = min(hi, DEFAULT_SIEVE_LIMIT) if hi - lo + 1 >= 64 else 0
        _worker_init(limit)
        reports = _verify_chunk((args.identity, lo, hi, s, args.tol, args.depth))
    else:
        ranges = _chunk_ranges(lo, hi, args.parallelism)
        params = [(args.identity, a, b, s, args.tol, args.depth)
                  for a, b in ranges]
        limit = min(hi, DEFAULT_SIEVE_LIMIT) if hi - lo + 1 >= 64 else 0
        with ProcessPoolExecutor(max_workers=args.parallelism,
                                 initializer=_worker_init,
                                 initargs=(limit,)) as pool:
            for chunk in pool.map(_verify_chunk, params):
                reports.extend(chunk)

    failed = sum(1 for r in reports if not r.passed)
    max_disc = max((r.abs_discrepancy for r in reports), default=0.0)
    summary = {
        "checked": len(reports),
        "passed": len(reports) - failed,
        "failed": failed,
        "max_abs_discrepancy": max_disc,
    }

    sink = _Sink(args.out)
    if args.output == "text":
        for r in reports:
            sink.line(f"{r.identity} n={r.n} s={r.s_value_str or '-'} "
                      f"{r.mode} {'pass' if r.passed else 'FAIL'} "
                      f"lhs={render_value(r.lhs)} rhs={render_value(r.rhs)} "
                      f"disc={r.abs_discrepancy!r}")
        sink.line(f"summary: checked={summary['checked']} "
                  f"passed={summary['passed']} failed={summary['failed']} "
                  f"max_abs_discrepancy={summary['max_abs_discrepancy']!r}")
    elif args.output == "json":
        _emit_json(sink, {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "identity": args.identity,
            "n_lo": lo,
            "n_hi": hi,
            "s_mode": _s_mode(s),
            "s_value": _s_value(s),
            "tol": args.tol,
            "parallelism": args.parallelism,
            "seed": args.seed,
            "reports": [r.to_dict() for r in reports],
            "summary": summary,
        })
    else:
        sink.line(VERIFY_CSV_HEADER)
        for r in reports:
            d = r.to_dict()
            sink.line(",".join([d["identity"], str(d["n"]), d["s_mode"],
                                d["s_value"], d["lhs"], d["rhs"], d["mode"],
                                "true" if d["passed"] else "false",
                                repr(d["abs_discrepancy"])]))
    sink.flush()
    if args.output == "csv":
        print(f"summary: checked={summary['checked']} passed={summary['passed']} "
              f"failed={summary['failed']}", file=sys.stderr)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------

def _cmd_zeta(args) -> int:
    if args.tol <= 0:
        raise DomainError(f"--tol must be positive, got {args.tol}")
    ref_tol = min(args.tol, 1e-9)
    product = truncated_global_product(args.prime_bound, args.s)
    reference = zeta_reference(args.s, ref_tol) / zeta_reference(2 * args.s, ref_tol)
    diff = abs(product.value - reference)
    sink = _Sink(args.out)
    if args.output == "text":
        sink.line(f"truncated_product = {product.value!r}")
        sink.line(f"reference_ratio = {reference!r}")
        sink.line(f"abs_diff = {diff!r}")
        sink.line(f"tail_factor = {product.tail_factor!r}")
        sink.line(f"primes_used = {product.primes_used}")
    elif args.output == "json":
        _emit_json(sink, {
            "schema_version": SCHEMA_VERSION,
            "command": "zeta",
            "s": args.s,
            "prime_bound": args.prime_bound,
            "truncated_product": product.value,
            "reference_ratio": reference,
            "abs_diff": diff,
            "tail_factor": product.tail_factor,
            "primes_used": product.primes_used,
            "reference_tol": ref_tol,
        })
    else:
        sink.line("s,prime_bound,truncated_product,reference_ratio,abs_diff,"
                  "tail_factor,primes_used")
        sink.line(f"{args.s!r},{args.prime_bound},{product.value!r},"
                  f"{reference!r},{diff!r},{product.tail_factor!r},"
                  f"{product.primes_used}")
    sink.flush()
    return 0


# ---------------------------------------------------------------------------
# sieve
# ---------------------------------------------------------------------------

def _cmd_sieve(args) -> int:
    if args.n < 1:
        raise DomainError(f"--n must be positive, got {args.n}")
    s = _resolve_s(args)
    if s is None:
        s = 0  # the classical case
    decay_s: list[int] | None = None
    if args.decay_s is not None:
        try:
            decay_s = [int(tok) for tok in args.decay_s.split(",") if tok.strip()]
        except ValueError as exc:
            raise DomainError(f"bad --decay-s {args.decay_s!r}") from exc
        if not decay_s:
            raise DomainError("--decay-s needs at least one integer")
    if args.Q is not None and (args.Q[0] < 1 or args.Q[1] < 1):
        raise DomainError(f"--Q bounds must be positive, got {args.Q}")

    f = factorize(args.n)
    table = weight_table(f, s)
    doc = table.to_dict()
    q_value = None
    if args.Q is not None:
        q_value = quadratic_form(args.Q[0], args.Q[1], table)
    decay_rows = None
    if decay_s is not None:
        decay_rows = weight_decay_profile(f, list(decay_s))

    sink = _Sink(args.out)
    if args.output == "text":
        sink.line(f"n={doc['n']} s={doc['s_value']} J_n={doc['J_n']}")
        sink.line("d mu J_over_d lambda")
        for row in doc["weights"]:
            sink.line(f"{row['d']} {row['mu']} {row['J_over_d']} {row['lambda']}")
        if q_value is not None:
            sink.line(f"Q X={args.Q[0]} R={args.Q[1]} = {render_value(q_value)}")
        if decay_rows is not None:
            sink.line("decay: d s lambda")
            for d, sv, lam in decay_rows:
                sink.line(f"{d} {sv} {render_value(lam)}")
    elif args.output == "json":
        out = {"schema_version": SCHEMA_VERSION, "command": "sieve", **doc}
        if q_value is not None:
            out["Q"] = {"X": args.Q[0], "R": args.Q[1],
                        "value": render_value(q_value)}
        if decay_rows is not None:
            out["decay"] = [{"d": d, "s": sv, "lambda": render_value(lam)}
                            for d, sv, lam in decay_rows]
        _emit_json(sink, out)
    else:
        sink.line("n,s_mode,s_value,d,mu,J_over_d,lambda")
        for row in doc["weights"]:
            sink.line(f"{doc['n']},{doc['s_mode']},{doc['s_value']},{row['d']},"
                      f"{row['mu']},{row['J_over_d']},{row['lambda']}")
        if q_value is not None:
            print(f"Q X={args.Q[0]} R={args.Q[1]} = {render_value(q_value)}",
                  file=sys.stderr)
        if decay_rows is not None:
            print("decay profile omitted in csv mode; use text or json",
                  file=sys.stderr)
    sink.flush()
    return 0


# ---------------------------------------------------------------------------

_COMMANDS = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "zeta": _cmd_zeta,
    "sieve": _cmd_sieve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
