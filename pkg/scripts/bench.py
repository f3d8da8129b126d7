#!/usr/bin/env python3
"""lacuna benchmark harness.

Mode A (default): runs each certification workload (Theta table, telescoping,
enclosure soundness, targeting grid, harmonic sieve, polar identity, resonance
certificates, decay harness) once and reports wall time against its budget,
plus whether the workload's own check held.

Mode B (--depths): sweeps the prefix depth and reports how the exact-rational
cost of the Omega enclosure and Theta table grows as the integers do:

    python scripts/bench.py --depths 8 12 16 20 24

Results print as a Markdown table; --out also writes them to a file.
"""

from __future__ import annotations

import argparse
import math
import platform
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from lacuna.omega import approximants, omega_enclosure, theta_table  # noqa: E402
from lacuna.sequence import default_generator  # noqa: E402
from lacuna.sieve import sieve, sizes  # noqa: E402
from lacuna.target import TargetSpec, middle_third, targeted_omega  # noqa: E402
from lacuna.trig import (  # noqa: E402
    CoefficientPair,
    decay_check,
    polar_term_value,
    resonance_point,
    term_value,
    to_polar,
)


def theta_workload() -> bool:
    return all(r.passes for r in theta_table(default_generator(8, 3)))


def telescoping_workload() -> bool:
    for seed in (1, 2, 3, 5):
        seq = default_generator(10, seed)
        _, chain = approximants(seq)
        for k in range(2, 11):
            if abs(chain.at(k - 1) - chain.at(k)) > Fraction(1, seq.term(k)):
                return False
    return True


def enclosure_workload() -> bool:
    deep = default_generator(12, 3)
    _, chain = approximants(deep)
    for K in range(2, 12):
        omega = omega_enclosure(deep.prefix(K))
        if not all(omega.enclosure.contains(chain.at(j)) for j in range(K + 1, 13)):
            return False
        if omega_enclosure(deep.prefix(K + 1)).enclosure.width > omega.enclosure.width / 4:
            return False
    return True


def targeting_workload() -> bool:
    seq = default_generator(8, 3)
    for nu in range(1, 5):
        for mu in range(1, 2 * nu + 1):
            spec = TargetSpec(mu, nu)
            result = targeted_omega(seq, spec)
            if not (result.contained and middle_third(spec).contains(result.xi_chain[0])):
                return False
    return True


def sieve_workload() -> bool:
    report = sieve(sizes(Fraction(1, n) for n in range(1, 1001)), levels=10)
    return report.levels[0].deleted == () and all(
        row.deleted == (row.level - 1,) for row in report.levels[1:]
    )


def polar_workload() -> bool:
    rng = np.random.default_rng(0)
    worst = 0.0
    for a, b, n, x in zip(
        rng.uniform(-10, 10, 10_000),
        rng.uniform(-10, 10, 10_000),
        rng.integers(1, 200, 10_000),
        rng.uniform(-math.pi, math.pi, 10_000),
        strict=True,
    ):
        t = to_polar(float(a), float(b))
        direct = term_value(CoefficientPair(int(n), float(a), float(b)), float(x))
        worst = max(worst, abs(direct - polar_term_value(int(n), t, float(x))) / max(t.rho, 1))
    return worst <= 1e-9


def resonance_workload() -> bool:
    seq = default_generator(8, 3)
    omega = omega_enclosure(seq)
    certs = [resonance_point(omega, seq, s) for s in range(2, 7)]
    return all(c.gap_at_midpoint <= c.cos_bound + 1e-6 for c in certs)


def decay_workload() -> bool:
    series = [CoefficientPair(n, 1.0 / n, 0.0) for n in range(1, 65)]
    report = decay_check(series, 0.1, 3.0, 2048)
    return not report.flags and all(r.grid_sup <= r.rho for r in report.rows)


WORKLOADS = [
    ("Theta table, seed 3 depth 8", theta_workload, 1.0),
    ("telescoping, seeds 1/2/3/5 depth 10", telescoping_workload, 1.0),
    ("enclosure soundness, K' <= 12", enclosure_workload, 5.0),
    ("targeting grid, nu <= 4", targeting_workload, 2.0),
    ("harmonic sieve, 1000 values x 10 levels", sieve_workload, 1.0),
    ("polar identity, 10^4 samples", polar_workload, 1.0),
    ("resonance certificates, s = 2..6", resonance_workload, 1.0),
    ("decay harness, n <= 64 on 2048 points", decay_workload, 5.0),
]


def hardware_line() -> str:
    cpu = platform.processor() or platform.machine()
    return f"{cpu}, Python {platform.python_version()}"


def timed(fn) -> tuple[float, bool]:
    t0 = time.perf_counter()
    ok = fn()
    return time.perf_counter() - t0, ok


def mode_a() -> list[str]:
    rows = ["| Workload | seconds | budget | check |", "|---|---|---|---|"]
    for label, fn, budget in WORKLOADS:
        elapsed, ok = timed(fn)
        verdict = "ok" if ok and elapsed < budget else ("slow" if ok else "FAIL")
        rows.append(f"| {label} | {elapsed:.3f} | {budget:.0f} | {verdict} |")
    return rows


def mode_b(depths: list[int], seed: int) -> list[str]:
    rows = ["| depth | digits of n_K | enclosure ms | Theta table ms |", "|---|---|---|---|"]
    for depth in depths:
        seq = default_generator(depth, seed)
        enc_s, _ = timed(lambda seq=seq: omega_enclosure(seq))
        tab_s, _ = timed(lambda seq=seq: theta_table(seq))
        rows.append(
            f"| {depth} | {len(str(seq.terms[-1]))} | {enc_s * 1000:.2f} | {tab_s * 1000:.2f} |"
        )
    return rows


def main():
    parser = argparse.ArgumentParser(description="Benchmark the lacuna workloads")
    parser.add_argument(
        "--depths", nargs="+", type=int, default=None, help="Prefix depths to sweep (mode B)"
    )
    parser.add_argument("--seed", type=int, default=3, help="First term for mode B")
    parser.add_argument("--out", default=None, help="Also write the table to this file")
    args = parser.parse_args()

    lines = [f"Hardware: {hardware_line()}", ""]
    if args.depths:
        lines += mode_b(args.depths, args.seed)
    else:
        lines += mode_a()

    report = "\n".join(lines)
    print(report)
    if args.out:
        Path(args.out).write_text(report + "\n")
        print(f"\nwritten to {args.out}")


if __name__ == "__main__":
    main()
