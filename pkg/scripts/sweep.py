#!/usr/bin/env python3
"""Desk-scale acceptance sweeps for schubert-cone.

Usage:
    uv run python scripts/sweep.py --checks hilbert bijection --max-n 6
    uv run python scripts/sweep.py --samples 10000 --seed 7

Defaults come from SCHUBERT_CONE_SWEEP_* settings. Exits 1 when any case fails.
"""

import argparse
import random
import sys
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from schubert_cone.config import get_settings
from schubert_cone.main import configure_logging
from schubert_cone.services.bijection import least_dominating_bruteforce, phi, pi
from schubert_cone.services.combinatorics import (
    GrassmannIndex,
    RootMonomial,
    bruhat_leq,
    dominates_monomial,
    grassmann_indices,
    nonpositive_roots,
    positive_roots,
    v_degree,
)
from schubert_cone.services.hilbert import (
    cross_check_faces,
    hilbert_direct,
    hilbert_inclusion_exclusion,
    maximal_dominated,
    multiplicity,
    smooth_point_hilbert,
)
from schubert_cone.services.lattice_paths import enumerate_tuples, monomial_to_tuple, tuple_to_monomial
from schubert_cone.services.minor_algebra import check_initial_terms, initial_ideal_hilbert
from schubert_cone.services.standard_monomials import count_SM
from shared.errors import SchubertConeError


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    duration: float = 0.0

    def fail(self, message: str) -> None:
        self.failures.append(message)


@dataclass(frozen=True)
class SweepOptions:
    max_n: int
    max_degree: int
    samples: int
    seed: int


def pairs(max_n: int) -> Iterator[tuple[GrassmannIndex, GrassmannIndex]]:
    """Every v <= w in I(d,n), 1 <= d < n <= max_n."""
    for n in range(2, max_n + 1):
        for d in range(1, n):
            indices = grassmann_indices(d, n)
            for v in indices:
                for w in indices:
                    if bruhat_leq(v, w):
                        yield v, w


def sweep_hilbert(opts: SweepOptions) -> SweepResult:
    """Direct count, face formula and standard monomials agree."""
    result = SweepResult("hilbert")
    for v, w in pairs(opts.max_n):
        family = maximal_dominated(v, w)
        for m in range(opts.max_degree + 1):
            result.cases += 1
            direct = hilbert_direct(v, w, m)
            faces = hilbert_inclusion_exclusion(v, w, m, family)
            standard = count_SM(v, w, m)
            if not direct == faces == standard:
                result.fail(f"v={v} w={w} m={m}: direct={direct} faces={faces} SM={standard}")
    return result


def _random_monomial(rng: random.Random) -> RootMonomial:
    n = rng.randint(2, 8)
    d = rng.randint(1, n - 1)
    v = rng.choice([v for v in grassmann_indices(d, n) if positive_roots(v)])
    degree = rng.randint(1, 6)
    return RootMonomial.of(v, rng.choices(positive_roots(v), k=degree))


def sweep_bijection(opts: SweepOptions) -> SweepResult:
    """Properties of pi and the inverse pair pi/phi on random monomials."""
    result = SweepResult("bijection")
    rng = random.Random(opts.seed)
    for _ in range(opts.samples):
        m = _random_monomial(rng)
        v = m.v
        result.cases += 1
        image = pi(m)
        if not (bruhat_leq(v, image.w) and image.w != v):
            result.fail(f"{m}: w={image.w} is not strictly above v={v}")
        elif v_degree(image.w, v) + image.residual.degree != m.degree:
            result.fail(f"{m}: degree is not preserved")
        elif not dominates_monomial(image.w, v, image.residual):
            result.fail(f"{m}: w={image.w} does not dominate the residual")
        elif image.w != least_dominating_bruteforce(m, v):
            result.fail(f"{m}: w={image.w} is not the least dominating index")
        elif phi(image.w, v, image.residual) != m:
            result.fail(f"{m}: phi does not invert pi")
    return result


def sweep_groebner(opts: SweepOptions) -> SweepResult:
    """Initial terms of every minor, then the initial ideal's Hilbert function."""
    result = SweepResult("groebner")
    seen: set[GrassmannIndex] = set()
    for v, w in pairs(opts.max_n):
        if v not in seen:
            seen.add(v)
            report = check_initial_terms(v)
            result.cases += report.checked
            for item in report.violations:
                result.fail(f"v={v} theta={item.theta} family={item.family}: {item.initial}")
        # the initial ideal count is checked one size down
        if v.n > opts.max_n - 1:
            continue
        for m in range(min(opts.max_degree, 4) + 1):
            result.cases += 1
            standard, expected = initial_ideal_hilbert(v, w, m), hilbert_direct(v, w, m)
            if standard != expected:
                result.fail(f"v={v} w={w} m={m}: standard={standard} hilbert={expected}")
    return result


def sweep_paths(opts: SweepOptions) -> SweepResult:
    """Path tuples round-trip and count the multiplicity."""
    result = SweepResult("paths")
    for v, w in pairs(opts.max_n):
        result.cases += 1
        tuples = enumerate_tuples(v, w)
        cross_check_faces(v, w)
        if len(tuples) != multiplicity(v, w):
            result.fail(f"v={v} w={w}: {len(tuples)} tuples, multiplicity {multiplicity(v, w)}")
        for t in tuples:
            if monomial_to_tuple(tuple_to_monomial(t), w) != t:
                result.fail(f"v={v} w={w}: round trip failed")
                break
    return result


def sweep_smooth(opts: SweepOptions) -> SweepResult:
    """At v = w the cone is an affine space."""
    result = SweepResult("smooth")
    for n in range(2, opts.max_n + 1):
        for d in range(1, n):
            for v in grassmann_indices(d, n):
                result.cases += 1
                if multiplicity(v, v) != 1:
                    result.fail(f"v={v}: multiplicity {multiplicity(v, v)}")
                free = len(nonpositive_roots(v))
                for m in range(opts.max_degree + 1):
                    if hilbert_direct(v, v, m) != smooth_point_hilbert(v, m):
                        result.fail(f"v={v} m={m}: expected C(m+{free}-1,{free}-1)")
    return result


SWEEPS: dict[str, Callable[[SweepOptions], SweepResult]] = {
    "hilbert": sweep_hilbert,
    "bijection": sweep_bijection,
    "groebner": sweep_groebner,
    "paths": sweep_paths,
    "smooth": sweep_smooth,
}


def run_sweeps(names: list[str], opts: SweepOptions) -> list[SweepResult]:
    results = []
    for name in names:
        start = time.perf_counter()
        try:
            result = SWEEPS[name](opts)
        except SchubertConeError as exc:
            result = SweepResult(name)
            result.fail(f"aborted: {exc}")
        result.duration = time.perf_counter() - start
        results.append(result)
    return results


def print_report(results: list[SweepResult], opts: SweepOptions) -> None:
    print(f"\n{'=' * 70}")
    print("SCHUBERT-CONE - SWEEP REPORT")
    print(f"{'=' * 70}")
    print(f"max n: {opts.max_n} | max degree: {opts.max_degree} | samples: {opts.samples} | seed: {opts.seed}")
    print(f"{'=' * 70}\n")

    for result in results:
        status = "OK" if not result.failures else f"{len(result.failures)} FAILED"
        print(f"{result.name}")
        print(f"  Cases    : {result.cases}")
        print(f"  Time     : {result.duration:.2f}s")
        print(f"  Status   : {status}")
        for message in result.failures[:10]:
            print(f"    - {message}")
        print()


def main() -> None:
    settings = get_settings()
    parser = argparse.ArgumentParser(description="Run the schubert-cone acceptance sweeps")
    parser.add_argument("--checks", nargs="+", choices=list(SWEEPS), default=list(SWEEPS))
    parser.add_argument("--max-n", type=int, default=settings.sweep_max_n)
    parser.add_argument("--max-degree", type=int, default=settings.sweep_max_degree)
    parser.add_argument("--samples", type=int, default=settings.sweep_samples)
    parser.add_argument("--seed", type=int, default=settings.sweep_seed)
    args = parser.parse_args()

    configure_logging()
    opts = SweepOptions(args.max_n, args.max_degree, args.samples, args.seed)
    results = run_sweeps(args.checks, opts)
    print_report(results, opts)
    sys.exit(1 if any(r.failures for r in results) else 0)


if __name__ == "__main__":
    main()
