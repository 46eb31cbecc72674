"""Seeded randomized verification suites, shared by the CLI and the tests.

Each suite returns a dict {"checked": N, "failed": M, ...} and is
deterministic for a fixed seed, so CI output is byte-identical run to run.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import fock
from .linalg import (SkewMatrix, bkp_kernel_matrix, bkp_kernel_pfaffian,
                     determinant, determinant_permanent_oracle, pfaffian,
                     pfaffian_matching_oracle)
from .partitions import Partition, StrictPartition
from .series import FlowVector, RSeq


def random_fraction(rng: random.Random, span: int = 6, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, 4))
        if value != 0 or not nonzero:
            return value


def random_partition(rng: random.Random, max_weight: int) -> Partition:
    parts = []
    remaining = rng.randint(0, max_weight)
    cap = remaining
    while remaining > 0 and cap > 0:
        p = rng.randint(1, cap)
        parts.append(p)
        remaining -= p
        cap = min(p, remaining)
    return Partition(parts)


def random_strict_partition(rng: random.Random, max_weight: int) -> StrictPartition:
    parts = []
    remaining = rng.randint(0, max_weight)
    cap = remaining
    while remaining > 0 and cap > 0:
        p = rng.randint(1, cap)
        parts.append(p)
        remaining -= p
        cap = min(p - 1, remaining)
    return StrictPartition(parts)


def random_rseq(rng: random.Random, lo: int, hi: int, nonzero: bool = True) -> RSeq:
    return RSeq({j: random_fraction(rng, 5, nonzero=nonzero)
                 for j in range(lo, hi + 1)}, lo, hi)


def random_flow(rng: random.Random, max_index: int, odd_only: bool = False) -> FlowVector:
    table = {j: random_fraction(rng, 4) for j in range(1, max_index + 1)
             if not odd_only or j % 2 == 1}
    return FlowVector(table, bkp=odd_only)


def distinct_positive_points(rng: random.Random, count: int) -> list:
    """Pairwise distinct positive rationals (so no pair sums to zero)."""
    points = set()
    while len(points) < count:
        points.add(Fraction(rng.randint(1, 60), rng.randint(1, 7)))
    return sorted(points)


def random_skew(rng: random.Random, n: int, span: int = 5) -> SkewMatrix:
    return SkewMatrix.from_upper(n, lambda i, j: random_fraction(rng, span))


def suite_wick(seed: int = 0, size: int = 200, window: int = fock.DEFAULT_WINDOW) -> dict:
    """Random Wick checks plus the anticommutator and pairing tables."""
    rng = random.Random(seed)
    checked = failed = 0

    def random_op():
        kind = rng.choice(["psi", "psidag", "phi", "phim", "mix"])
        mode = rng.randint(-4, 4)
        if kind == "psi":
            return fock.psi(mode, random_fraction(rng, 3, nonzero=True))
        if kind == "psidag":
            return fock.psidag(mode, random_fraction(rng, 3, nonzero=True))
        if kind == "phi":
            return fock.phi(mode)
        if kind == "phim":
            return fock.phi(mode, minus=True)
        return fock.psi(mode, random_fraction(rng, 3)) + \
            fock.psidag(rng.randint(-4, 4), random_fraction(rng, 3))

    for _ in range(size):
        word = [random_op() for _ in range(rng.choice([2, 4, 6, 8, 3, 5]))]
        direct, pf = fock.wick_check(word, window)
        checked += 1
        if direct != pf:
            failed += 1

    table_failures = 0
    for j in range(-4, 5):
        for k in range(-4, 5):
            got = fock.vev([fock.phi(j), fock.phi(k)], window)
            if k > 0:
                expect = fock.Scalar((-1) ** (k % 2) if j == -k else 0)
            elif k == 0:
                expect = fock.Scalar(Fraction(1, 2) if j == 0 else 0)
            else:
                expect = fock.Scalar(0)
            checked += 1
            if got != expect:
                table_failures += 1
            mixed = fock.vev([fock.phi(j), fock.phi(k, minus=True)], window)
            expect_mixed = fock.Scalar(0, Fraction(1, 2)) if j == k == 0 else fock.Scalar(0)
            checked += 1
            if mixed != expect_mixed:
                table_failures += 1
    failed += table_failures

    state = fock.FockState.vacuum(window)
    for op in (fock.psi(2), fock.psidag(-1), fock.phi(1)):
        state = fock.apply(op, state) + state.scale(random_fraction(rng, 2))
    anti_failures = 0
    for j in range(-3, 4):
        for k in range(-3, 4):
            s = fock.apply(fock.psi(j), fock.apply(fock.psidag(k), state)) + \
                fock.apply(fock.psidag(k), fock.apply(fock.psi(j), state))
            checked += 1
            if s != state.scale(1 if j == k else 0):
                anti_failures += 1
    failed += anti_failures
    return {"suite": "wick", "seed": seed, "checked": checked, "failed": failed}


def suite_pfaffian(seed: int = 0, size: int = 40) -> dict:
    """Elimination Pfaffian vs matching oracle, Pf^2 = det, kernel closed form."""
    rng = random.Random(seed)
    checked = failed = 0
    for _ in range(size):
        n = rng.choice([2, 4, 6, 8])
        skew = random_skew(rng, n)
        checked += 1
        if pfaffian(skew) != pfaffian_matching_oracle(skew):
            failed += 1
    for _ in range(size):
        n = rng.choice([2, 4, 6, 8, 10])
        skew = random_skew(rng, n)
        checked += 1
        if pfaffian(skew) ** 2 != determinant(skew.rows):
            failed += 1
    for _ in range(max(size // 4, 3)):
        n = rng.choice([4, 6])
        rows = [[random_fraction(rng, 4) for _ in range(n)] for _ in range(n)]
        checked += 1
        if determinant(rows) != determinant_permanent_oracle(rows):
            failed += 1
    for _ in range(size // 2):
        count = rng.choice([2, 4, 6, 8])
        points = distinct_positive_points(rng, count)
        checked += 1
        if pfaffian(bkp_kernel_matrix(points)) != bkp_kernel_pfaffian(points):
            failed += 1
    return {"suite": "pfaffian", "seed": seed, "checked": checked, "failed": failed}


SUITES = {"wick": suite_wick, "pfaffian": suite_pfaffian}


def run_suite(name: str, seed: int = 0, size: int | None = None) -> dict:
    if name == "all":
        results = [run_suite(key, seed, size) for key in sorted(SUITES)]
        return {"suite": "all", "seed": seed,
                "checked": sum(r["checked"] for r in results),
                "failed": sum(r["failed"] for r in results),
                "parts": results}
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    if size is None:
        return fn(seed)
    return fn(seed, size)
