"""Brute-force oracles and the verification sweeps built on them.

The oracles share nothing with the constructive factorizers except the
monoid product: minimal word lengths come from breadth-first search over
the right Cayley graph, and classification checks run the definitional
scans of :mod:`premonoid.core` against the closed forms.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import config
from . import linear as la
from . import transformations as tf
from .config import DEFAULT_SEED
from .core import factor_into_irreducibles, factor_into_quarks_bounded, is_irreducible, quark_bound
from .errors import PremonoidError, SizeCapExceeded
from .factorizers import cartan_dieudonne_factor, howie_factor, transposition_factor
from .monoids import (FiniteMonoid, TransformationMonoid, cyclic_group, direct_product,
                      divisibility_preorder, full_transformation_monoid, is_dedekind_finite,
                      reduced_power_monoid, symmetric_group, trivial_monoid)
from .core import Premonoid
from .preorder import validate_preorder
from .rfix import (fix_preorder, permutation_height_formula, permutation_rfix_premonoid,
                   rfix_preorder, singular_height_formula, singular_rfix_premonoid)

CSV_COLUMNS = ["suite", "n", "element", "fix_size", "bound", "constructive_len", "oracle_len", "status"]

# largest n at which each definitional scan runs
SINGULAR_SCAN_MAX_N = 5
PERMUTATION_SCAN_MAX_N = 7
IRREDUCIBLE_SCAN_MAX_N = 4
FIX_AGREEMENT_MAX_N = 4
# preorders come from right-fixer sets of the whole T_n up to here, from fixed points beyond
DEFINITIONAL_MAX_N = 5
ORACLE_MAX_N = 5


@dataclass
class OracleResult:
    target: int
    min_length: int | None          # None: target not reachable
    witness: list[int] = field(default_factory=list)

    @property
    def reachable(self) -> bool:
        return self.min_length is not None


@dataclass
class CayleyBFS:
    """Distances from the identity in the right Cayley graph of a generator set."""

    monoid: FiniteMonoid
    generators: list[int]
    dist: np.ndarray               # -1 where unreachable
    parent: np.ndarray
    via: np.ndarray                # generator index used to reach each element

    def word(self, target: int) -> list[int]:
        if self.dist[target] < 0:
            raise PremonoidError(f"element {target} is not generated")
        out = []
        x = target
        while x != self.monoid.identity:
            out.append(self.generators[self.via[x]])
            x = int(self.parent[x])
        return out[::-1]

    def result(self, target: int) -> OracleResult:
        if self.dist[target] < 0:
            return OracleResult(target, None, [])
        return OracleResult(target, int(self.dist[target]), self.word(target))

    @property
    def reachable(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.dist >= 0))


def _right_successors(m: FiniteMonoid, generators: list[int]) -> np.ndarray:
    """succ[w, k] = index of w . generators[k]."""
    if not generators:
        return np.zeros((m.size, 0), dtype=np.int64)
    if isinstance(m, TransformationMonoid):
        n = m.n
        E = np.array(m.elements, dtype=np.int64).reshape(m.size, n)
        weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        lookup = np.full(n ** n, -1, dtype=np.int64)
        lookup[E @ weights] = np.arange(m.size)
        cols = []
        for g in generators:
            codes = E[:, list(m.elements[g])] @ weights    # (w o g)(i) = w(g(i))
            cols.append(lookup[codes])
        succ = np.stack(cols, axis=1)
        if (succ < 0).any():
            raise PremonoidError("carrier not closed under the generators")
        return succ
    if m.size <= config.max_table():
        return np.asarray(m.table)[:, generators]
    return np.array([[m.mul(w, g) for g in generators] for w in range(m.size)])


def cayley_bfs(m: FiniteMonoid, generators) -> CayleyBFS:
    if isinstance(m, TransformationMonoid) and m.n > config.max_bfs_n():
        raise SizeCapExceeded(f"BFS over n = {m.n} exceeds PREMONOID_MAX_BFS_N = {config.max_bfs_n()}")
    gens = [int(g) for g in generators]
    succ = _right_successors(m, gens)
    size = m.size
    dist = np.full(size, -1, dtype=np.int64)
    parent = np.full(size, -1, dtype=np.int64)
    via = np.full(size, -1, dtype=np.int64)
    dist[m.identity] = 0
    queue = deque([m.identity])
    last = 0
    while queue:
        w = queue.popleft()
        dw = dist[w]
        assert dw >= last
        last = dw
        for k, y in enumerate(succ[w]):
            if dist[y] < 0:
                dist[y] = dw + 1
                parent[y] = w
                via[y] = k
                queue.append(int(y))
    return CayleyBFS(m, gens, dist, parent, via)


def min_factorization_length(m: FiniteMonoid, generators, target: int) -> OracleResult:
    bfs = cayley_bfs(m, generators)
    res = bfs.result(target)
    if res.reachable:
        assert m.product(res.witness) == target
    return res


def quasi_identity_bfs(n: int) -> CayleyBFS:
    m = full_transformation_monoid(n)
    return cayley_bfs(m, [m.index(q) for q in tf.quasi_identities(n)])


def transposition_bfs(n: int) -> CayleyBFS:
    m = symmetric_group(n)
    return cayley_bfs(m, [m.index(t) for t in tf.transpositions(n)])


@dataclass
class SweepReport:
    suite: str
    params: dict
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, element, expected, got):
        self.failures.append((element, expected, got))

    def merge(self, other: SweepReport):
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.rows.extend(other.rows)
        if other.notes:
            self.notes.setdefault(other.suite, {}).update(other.notes)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite, "params": self.params, "checked": self.checked,
            "passed": self.passed,
            "failures": [[str(x) for x in f] for f in self.failures],
            "notes": self.notes,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: row.get(k, "") for k in CSV_COLUMNS})
        return buf.getvalue()


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _evaluate_word(factors, n):
    # pointwise, rightmost factor first; deliberately not tf.compose_all
    out = []
    for x in range(n):
        for f in reversed(factors):
            x = f[x]
        out.append(x)
    return tuple(out)


def _fixed_count(t):
    return sum(1 for i in range(len(t)) if t[i] == i)


@_timed
def sweep_howie(max_n: int, min_n: int = 2, oracle_max_n: int = ORACLE_MAX_N) -> SweepReport:
    """Every singular non-identity map of T_n: quasi-identity factors, exact
    product, length bound, and BFS minimum <= constructive length."""
    rep = SweepReport("howie", {"min_n": min_n, "max_n": max_n, "oracle_max_n": oracle_max_n})
    max_gap = {}
    for n in range(min_n, max_n + 1):
        bfs = quasi_identity_bfs(n) if n <= oracle_max_n else None
        if bfs is not None:
            m = bfs.monoid
            expected = frozenset(i for i, e in enumerate(m.elements)
                                 if tf.is_singular(e) or tf.is_identity(e))
            if bfs.reachable != expected:
                rep.fail(f"T_{n}", "reachable = singular + id", f"{len(bfs.reachable)} reachable")
        gap = 0
        for t in tf.all_transformations(n):
            if not tf.is_singular(t):
                continue
            rep.checked += 1
            d = _fixed_count(t)
            bound = 2 * (n - d) - 1
            row = {"suite": "howie", "n": n, "element": tf.format_images(t), "fix_size": d, "bound": bound}
            try:
                cert = howie_factor(t)
            except Exception as exc:          # report, keep sweeping
                rep.fail(tf.format_images(t), "factorization", repr(exc))
                rep.rows.append({**row, "status": "error"})
                continue
            ok = (_evaluate_word(cert.factors, n) == t
                  and all(_fixed_count(q) == n - 1 for q in cert.factors)
                  and cert.length <= bound)
            oracle_len = ""
            if bfs is not None:
                oracle_len = int(bfs.dist[bfs.monoid.index(t)])
                ok = ok and 0 < oracle_len <= cert.length
                gap = max(gap, bound - oracle_len)
            if not ok:
                rep.fail(tf.format_images(t), f"<= {bound} quasi-identities", cert.length)
            rep.rows.append({**row, "constructive_len": cert.length, "oracle_len": oracle_len,
                             "status": "ok" if ok else "FAIL"})
        if bfs is not None:
            max_gap[n] = gap
    rep.notes["max_bound_minus_oracle"] = max_gap
    return rep


@_timed
def sweep_transpositions(max_n: int, min_n: int = 2, oracle_max_n: int = ORACLE_MAX_N) -> SweepReport:
    """Every non-identity permutation: transposition factors, exact product,
    length bound, and BFS minimum <= constructive length."""
    rep = SweepReport("transpositions", {"min_n": min_n, "max_n": max_n, "oracle_max_n": oracle_max_n})
    for n in range(min_n, max_n + 1):
        bfs = transposition_bfs(n) if n <= oracle_max_n else None
        if bfs is not None and len(bfs.reachable) != bfs.monoid.size:
            rep.fail(f"S_{n}", "reachable = S_n", f"{len(bfs.reachable)} reachable")
        for p in tf.all_permutations(n):
            if tf.is_identity(p):
                continue
            rep.checked += 1
            d = _fixed_count(p)
            bound = n - d - 1
            cert = transposition_factor(p)
            ok = (_evaluate_word(cert.factors, n) == p
                  and all(_fixed_count(t) == n - 2 and len(set(t)) == n for t in cert.factors)
                  and cert.length <= bound)
            oracle_len = ""
            if bfs is not None:
                oracle_len = int(bfs.dist[bfs.monoid.index(p)])
                ok = ok and 0 < oracle_len <= cert.length
            if not ok:
                rep.fail(tf.format_images(p), f"<= {bound} transpositions", cert.length)
            rep.rows.append({"suite": "transpositions", "n": n, "element": tf.format_images(p),
                             "fix_size": d, "bound": bound, "constructive_len": cert.length,
                             "oracle_len": oracle_len, "status": "ok" if ok else "FAIL"})
    return rep


def check_singular_quarks(n: int, definitional: bool = False) -> SweepReport:
    rep = SweepReport("quarks-singular", {"n": n, "definitional": definitional})
    pm = singular_rfix_premonoid(n, definitional)
    for x, e in enumerate(pm.monoid.elements):
        rep.checked += 1
        found = bool(pm.quark_mask[x])
        closed = _fixed_count(e) == n - 1
        if found != closed:
            rep.fail(tf.format_images(e), closed, found)
    return rep


def check_permutation_quarks(n: int, definitional: bool = False) -> SweepReport:
    rep = SweepReport("quarks-permutation", {"n": n, "definitional": definitional})
    pm = permutation_rfix_premonoid(n, definitional)
    for x, e in enumerate(pm.monoid.elements):
        rep.checked += 1
        found = bool(pm.quark_mask[x])
        closed = _fixed_count(e) == n - 2
        if found != closed:
            rep.fail(tf.format_images(e), closed, found)
    return rep


def check_singular_irreducibles(n: int, definitional: bool = False) -> SweepReport:
    rep = SweepReport("irreducibles-singular", {"n": n, "definitional": definitional})
    pm = singular_rfix_premonoid(n, definitional)
    for x, e in enumerate(pm.monoid.elements):
        rep.checked += 1
        found = is_irreducible(pm, x, 2)
        closed = _fixed_count(e) == n - 1
        if found != closed:
            rep.fail(tf.format_images(e), closed, found)
    return rep


def check_fix_preorder_agreement(n: int) -> SweepReport:
    rep = SweepReport("fix-agreement", {"n": n})
    m = full_transformation_monoid(n)
    definitional = rfix_preorder(m).le
    fast = fix_preorder(n).le
    rep.checked = m.size ** 2
    for f, g in np.argwhere(definitional != fast):
        rep.fail((tf.format_images(m.elements[f]), tf.format_images(m.elements[g])),
                 bool(definitional[f, g]), bool(fast[f, g]))
    return rep


@_timed
def sweep_characterizations(max_n: int) -> SweepReport:
    """Definitional quark/irreducible scans against the closed forms, and the
    right-fixer preorder against the fixed-point preorder.

    Up to DEFINITIONAL_MAX_N the scanned premonoids carry the preorder built
    from right-fixer sets of the whole T_n; beyond it (permutations up to 7)
    they use the fixed-point form, which the agreement check ties back.
    """
    rep = SweepReport("characterizations", {"max_n": max_n})
    for n in range(2, max_n + 1):
        by_def = n <= DEFINITIONAL_MAX_N
        if n <= SINGULAR_SCAN_MAX_N:
            rep.merge(check_singular_quarks(n, by_def))
        if n <= PERMUTATION_SCAN_MAX_N:
            rep.merge(check_permutation_quarks(n, by_def))
        if n <= IRREDUCIBLE_SCAN_MAX_N:
            rep.merge(check_singular_irreducibles(n, by_def))
        if n <= FIX_AGREEMENT_MAX_N:
            rep.merge(check_fix_preorder_agreement(n))
    return rep


def check_heights(pm: Premonoid, formula, suite: str) -> SweepReport:
    rep = SweepReport(suite, {"premonoid": pm.name})
    h = pm.heights
    for x, e in enumerate(pm.monoid.elements):
        rep.checked += 1
        want = formula(e)
        if h[x] != want:
            rep.fail(tf.format_images(e), want, h[x])
    return rep


@_timed
def sweep_heights(max_n: int) -> SweepReport:
    """Longest-chain heights against n - |fix| (singular) and n - 1 - |fix| (permutations)."""
    rep = SweepReport("heights", {"max_n": max_n})
    for n in range(2, max_n + 1):
        if n <= SINGULAR_SCAN_MAX_N:
            rep.merge(check_heights(singular_rfix_premonoid(n), singular_height_formula, "heights-singular"))
        if n <= PERMUTATION_SCAN_MAX_N:
            rep.merge(check_heights(permutation_rfix_premonoid(n), permutation_height_formula,
                                    "heights-permutation"))
    return rep


BASE_MONOIDS = {
    "trivial": trivial_monoid,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "Z4": lambda: cyclic_group(4),
    "Z2xZ2": lambda: direct_product(cyclic_group(2), cyclic_group(2)),
    "S3": lambda: symmetric_group(3),
}


def base_monoid(name: str) -> FiniteMonoid:
    try:
        return BASE_MONOIDS[name]()
    except KeyError:
        raise PremonoidError(f"unknown base monoid {name!r}; choose from {sorted(BASE_MONOIDS)}") from None


def check_power_monoid(name: str) -> SweepReport:
    rep = SweepReport("power", {"base": name})
    base = base_monoid(name)
    h = reduced_power_monoid(base)
    e = base.identity
    df = is_dedekind_finite(h)
    if not df:
        rep.fail(name, "Dedekind-finite", df.witness)
    if [h.elements[u] for u in h.unit_indices] != [(e,)]:
        rep.fail(name, "units = {{1_M}}", [h.elements[u] for u in h.unit_indices])
    order = divisibility_preorder(h)
    if not validate_preorder(order):
        rep.fail(name, "valid preorder", validate_preorder(order))
    # divisibility refines inclusion
    for x, y in np.argwhere(order.le):
        if not set(h.elements[x]) <= set(h.elements[y]):
            rep.fail((h.elements[x], h.elements[y]), "X divides Y => X subset Y", False)
    pm = Premonoid(h, order, name=f"div({h.name})")
    for x in range(h.size):
        if pm.unit_mask[x]:
            continue
        rep.checked += 1
        cert = factor_into_irreducibles(pm, x, 2)
        setwise = {e}
        for f in cert.factors:
            setwise = {int(base.table[a, b]) for a in setwise for b in h.elements[f]}
        ok = (tuple(sorted(setwise)) == h.elements[x]
              and all(is_irreducible(pm, f, 2) for f in cert.factors))
        if not ok:
            rep.fail(h.elements[x], "product of irreducibles", [h.elements[f] for f in cert.factors])
    return rep


@_timed
def sweep_power_monoids(bases=("Z2", "Z3", "Z2xZ2", "S3")) -> SweepReport:
    """Reduced power monoids: Dedekind-finite, trivial unit group, divisibility
    refines inclusion, every non-unit a product of irreducibles."""
    rep = SweepReport("power", {"bases": list(bases)})
    for name in bases:
        rep.merge(check_power_monoid(name))
    return rep


@_timed
def sweep_cd(dims=(2, 3, 4, 5), trials: int = 100, seed: int = DEFAULT_SEED) -> SweepReport:
    """Seeded products of at most n random reflections, factored back into
    at most n reflections; the identity must give the empty product."""
    rep = SweepReport("cd", {"dims": list(dims), "trials": trials, "seed": seed})
    rng = random.Random(seed)
    for n in dims:
        empty = cartan_dieudonne_factor(la.identity(n))
        if empty.length != 0:
            rep.fail(f"I_{n}", 0, empty.length)
        for trial in range(trials):
            k = rng.randint(0, n)
            f = la.random_rational_orthogonal(n, k, rng.randrange(2 ** 32))
            rep.checked += 1
            cert = cartan_dieudonne_factor(f)
            product = la.identity(n)
            for g in cert.factors:
                product = product @ g
            fixed = la.fix_rank(f)
            ok = (product == f and cert.length <= n - fixed <= n
                  and all(la.is_reflection(g) for g in cert.factors))
            if not ok:
                rep.fail(str(f), f"<= {n - fixed} reflections", cert.length)
            rep.rows.append({"suite": "cd", "n": n, "element": f"trial{trial}", "fix_size": fixed,
                             "bound": n, "constructive_len": cert.length, "oracle_len": "",
                             "status": "ok" if ok else "FAIL"})
    return rep


@_timed
def sweep_bounded(ns=(3, 4), s: int = 3) -> SweepReport:
    """Generic quark engine on the singular r.fix premonoid: bound and
    per-step height inequality on every non-unit."""
    rep = SweepReport("bounded", {"ns": list(ns), "s": s})
    for n in ns:
        pm = singular_rfix_premonoid(n)
        h = pm.heights
        elements = pm.monoid.elements
        for x in range(pm.size):
            if pm.unit_mask[x]:
                continue
            rep.checked += 1
            cert = factor_into_quarks_bounded(pm, x, s)
            bound = quark_bound(s, h[x])
            ok = (_evaluate_word([elements[f] for f in cert.factors], n) == elements[x]
                  and cert.length <= bound
                  and all(_fixed_count(elements[f]) == n - 1 for f in cert.factors)
                  and all(st["height_sum"] <= st["allowed"]
                          and all(pm.order.strict[p, st["element"]] for p in st["parts"])
                          for st in cert.steps))
            if not ok:
                rep.fail(tf.format_images(elements[x]), f"<= {bound} quarks", cert.length)
            rep.rows.append({"suite": "bounded", "n": n, "element": tf.format_images(elements[x]),
                             "fix_size": _fixed_count(elements[x]), "bound": bound,
                             "constructive_len": cert.length, "oracle_len": "",
                             "status": "ok" if ok else "FAIL"})
    return rep
