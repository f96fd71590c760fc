"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All arithmetic is exact, so every comparison is equality with no tolerance.
Run with ``pytest tests/test_acceptance.py -v`` (the summary lines appear at
the end of the run) or directly with ``python3 tests/test_acceptance.py``.
"""
import itertools
import math
import time

import pytest

from premonoid import oracle
from premonoid import transformations as tf
from premonoid.config import DEFAULT_SEED
from premonoid.monoids import full_transformation_monoid, is_acyclic, is_cancellative, is_dedekind_finite

RESULTS = {}


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    assert ok, line


def singular_count(n):
    return n ** n - math.factorial(n)


def test_criterion_01_howie_bound():
    rep = oracle.sweep_howie(6, oracle_max_n=0)
    want = sum(singular_count(n) for n in range(2, 7))
    ok = rep.passed and rep.checked == want == 49196
    record(1, "Howie bound, every singular map of T_2..T_6", ok,
           f"{rep.checked} maps, {len(rep.failures)} failures, {rep.wall_time:.1f}s")


def test_criterion_02_oracle_sandwich():
    rep = oracle.sweep_howie(5)
    n5 = oracle.sweep_howie(5, min_n=5)
    ok = (rep.passed and rep.checked == sum(singular_count(n) for n in range(2, 6))
          and n5.wall_time < 10)
    record(2, "BFS minimum <= constructive length, reachable = singular + id, n = 2..5", ok,
           f"{rep.checked} maps, n=5 in {n5.wall_time:.1f}s, gaps {rep.notes['max_bound_minus_oracle']}")


def test_criterion_03_quark_characterization():
    reps = [oracle.check_singular_quarks(n, definitional=True) for n in range(2, 6)]
    ok = all(r.passed for r in reps) and [r.checked for r in reps] == [3, 22, 233, 3006]
    record(3, "definitional quarks = quasi-identities in singular T_2..T_5", ok,
           f"{sum(r.checked for r in reps)} elements")


def test_criterion_04_irreducible_characterization():
    start = time.perf_counter()
    reps = [oracle.check_singular_irreducibles(n, definitional=True) for n in range(2, 5)]
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reps) and [r.checked for r in reps] == [3, 22, 233] and elapsed < 30
    record(4, "degree-2 irreducibles = quasi-identities in singular T_2..T_4", ok,
           f"{sum(r.checked for r in reps)} elements, {elapsed:.2f}s")


def test_criterion_05_rfix_equals_fix_preorder():
    reps = [oracle.check_fix_preorder_agreement(n) for n in range(2, 5)]
    ok = all(r.passed for r in reps) and [r.checked for r in reps] == [16, 729, 65536]
    record(5, "right-fixer preorder = fixed-point preorder on T_2..T_4", ok,
           f"{sum(r.checked for r in reps)} pairs")


def test_criterion_06_height_formulas():
    rep = oracle.sweep_heights(5)
    want = sum(singular_count(n) + 1 + math.factorial(n) for n in range(2, 6))
    ok = rep.passed and rep.checked == want
    record(6, "longest-chain heights = closed forms, singular and permutation n <= 5", ok,
           f"{rep.checked} elements")


def test_criterion_07_transpositions():
    rep = oracle.sweep_transpositions(7)
    quarks = [oracle.check_permutation_quarks(n, definitional=n <= 5) for n in range(2, 8)]
    ok = (rep.passed and rep.checked == sum(math.factorial(n) - 1 for n in range(2, 8))
          and all(q.passed for q in quarks))
    record(7, "transposition bound and quark = transposition, S_2..S_7 (oracle n <= 5)", ok,
           f"{rep.checked} permutations, {sum(q.checked for q in quarks)} classified")


def test_criterion_08_cartan_dieudonne():
    rep = oracle.sweep_cd((2, 3, 4, 5), trials=100, seed=DEFAULT_SEED)
    ok = rep.passed and rep.checked == 400 and rep.wall_time < 60
    record(8, "orthogonal matrices factor into <= n reflections, dims 2..5", ok,
           f"{rep.checked} matrices, seed {DEFAULT_SEED}, {rep.wall_time:.1f}s")


def test_criterion_09_power_monoids():
    rep = oracle.sweep_power_monoids(("Z2", "Z3", "Z2xZ2", "S3"))
    # non-units: 2^(|M|-1) - 1 subsets containing the identity besides {1_M}
    ok = rep.passed and rep.checked == 1 + 3 + 7 + 31
    record(9, "reduced power monoids: Dedekind-finite, trivial units, irreducible factorizations", ok,
           f"{rep.checked} non-units over Z2, Z3, Z2xZ2, S3")


def test_criterion_10_bounded_engine():
    rep = oracle.sweep_bounded((3, 4), s=3)
    ok = rep.passed and rep.checked == singular_count(3) + singular_count(4)
    record(10, "height-bounded quark engine, s = 3, singular T_3 and T_4", ok,
           f"{rep.checked} non-units")


def test_criterion_11_predicates_and_conjugation():
    m = full_transformation_monoid(3)
    df, ac, ca = is_dedekind_finite(m), is_acyclic(m), is_cancellative(m)
    checked = 0
    conj_ok = True
    for n in range(1, 5):
        for sigma in tf.all_permutations(n):
            for q in tf.quasi_identities(n):
                checked += 1
                conj_ok = conj_ok and tf.is_quasi_identity(tf.conjugate(sigma, q))
    ok = bool(df) and not ac and not ca and ac.witness is not None and ca.witness is not None and conj_ok
    def show(idx):
        return " ".join(tf.format_images(m.elements[i]) for i in idx)

    record(11, "T_3 Dedekind-finite, not acyclic, not cancellative; conjugation keeps quasi-identities", ok,
           f"acyclic witness (u x v) = ({show(ac.witness)}), cancellative witness (x y z) = "
           f"({show(ca.witness)}), {checked} conjugations")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
