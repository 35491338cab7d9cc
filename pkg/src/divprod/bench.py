"""Benchmark the compiled kernel against the pure-Python twin.

Runs the SPF sieve build and the three bulk verifiers on each available
backend, checks that the outcomes agree, and prints a timing table.

    python -m divprod.bench [--limit N] [--s S] [--s-real X]
"""

from __future__ import annotations

import argparse
import sys
import time

from ._backend import available_backends, load_backend


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def run(limit: int, s: int, s_real: float) -> int:
    names = available_backends()
    print(f"backends: {', '.join(names)}   (range 1..{limit}, "
          f"s={s}, real s={s_real})")
    results = {}
    for name in names:
        kernel = load_backend(name)
        t_sieve, spf = _time(kernel.build_spf, limit)
        t_din, din = _time(kernel.dineva_range, spf, 1, limit)
        if kernel.gdineva_int_supported(limit, s):
            t_gd, gd = _time(kernel.gdineva_int_range, spf, 1, limit, s)
        else:
            t_gd, gd = float("nan"), None
        t_re, re = _time(kernel.gdineva_real_range, spf, 1, limit, s_real, 1e-12)
        results[name] = {"sieve": t_sieve, "dineva": t_din, "gdineva_int": t_gd,
                         "gdineva_real": t_re,
                         "outcomes": (din, gd, re[:3])}
        print(f"  {name:8s} sieve={t_sieve:8.3f}s  dineva={t_din:8.3f}s  "
              f"gdineva_int={t_gd:8.3f}s  gdineva_real={t_re:8.3f}s")
        checked, failures, _ = din
        if failures:
            print(f"  {name}: UNEXPECTED dineva failures: {failures}")
            return 1
    if len(names) == 2:
        a, b = (results[n]["outcomes"] for n in names)
        if a != b:
            print("backend outcomes DISAGREE:", a, "vs", b)
            return 1
        print("outcomes agree across backends")
        for stage in ("sieve", "dineva", "gdineva_int", "gdineva_real"):
            tc = results["cython"][stage]
            tp = results["python"][stage]
            if tc > 0:
                print(f"  speedup {stage}: {tp / tc:.1f}x")
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=200_000)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--s-real", type=float, default=0.5)
    args = ap.parse_args(argv)
    return run(args.limit, args.s, args.s_real)


if __name__ == "__main__":
    sys.exit(main())
