"""Premonoids over finite carriers: classification, heights, factorization engines.

A premonoid pairs a :class:`~premonoid.monoids.FiniteMonoid` with a
:class:`~premonoid.preorder.FinitePreorder` on the same carrier; the two need
not be compatible in any way. Elements are carrier indices throughout.

Conventions
-----------
* Units factor as the empty product. The factor engines reject units with
  :class:`~premonoid.errors.NotANonUnit`; oracles report length 0 for them.
* When several splits qualify, the engines take the lexicographically
  smallest ``(k, y_1, ..., y_k)`` in carrier index order.
* Degree ``s`` is restricted to 2 or 3: the split search enumerates
  ``|H|^(s-1)`` candidates per element.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import CycleDetected, DegreeTooLarge, HypothesisViolation, NotANonUnit, PremonoidError
from .monoids import FiniteMonoid
from .preorder import FinitePreorder, PreorderReport, validate_preorder

MAX_DEGREE = 3


@dataclass(frozen=True, eq=False)
class Premonoid:
    monoid: FiniteMonoid
    order: FinitePreorder
    name: str = ""

    def __post_init__(self):
        if self.order.size != self.monoid.size:
            raise PremonoidError(
                f"preorder has {self.order.size} elements but the monoid has {self.monoid.size}")

    @property
    def size(self) -> int:
        return self.monoid.size

    @cached_property
    def unit_mask(self) -> np.ndarray:
        e = self.monoid.identity
        le = self.order.le
        return le[:, e] & le[e, :]

    @cached_property
    def nonunit_mask(self) -> np.ndarray:
        return ~self.unit_mask

    @cached_property
    def below(self) -> np.ndarray:
        """``below[x, y]`` iff y is a non-unit strictly below x."""
        return self.order.strict.T & self.nonunit_mask[None, :]

    @cached_property
    def quark_mask(self) -> np.ndarray:
        return self.nonunit_mask & ~self.below.any(axis=1)

    @cached_property
    def heights(self) -> HeightTable:
        return height(self)

    def validate(self) -> PreorderReport:
        return validate_preorder(self.order)


@dataclass(frozen=True)
class HeightTable:
    heights: np.ndarray

    def __getitem__(self, x: int) -> int:
        return int(self.heights[x])

    def __len__(self):
        return len(self.heights)

    def as_dict(self) -> dict[int, int]:
        return {i: int(h) for i, h in enumerate(self.heights)}


@dataclass
class Factorization:
    """Certificate for a factorization ``target = factors[0] * ... * factors[-1]``.

    ``target`` and ``factors`` are element handles of the producing module:
    carrier indices for the generic engines, image tuples for the
    transformation factorizers, matrices for reflections.
    """

    target: object
    factors: list
    trace: list = field(default_factory=list)
    bound: int | None = None
    steps: list[dict] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.factors)

    def within_bound(self) -> bool:
        return self.bound is None or self.length <= self.bound


def validate(pm: Premonoid) -> PreorderReport:
    return validate_preorder(pm.order)


def is_unit(pm: Premonoid, x: int) -> bool:
    return bool(pm.unit_mask[x])


def is_quark(pm: Premonoid, x: int) -> bool:
    return bool(pm.quark_mask[x])


def _check_degree(s: int):
    if s < 2:
        raise PremonoidError(f"degree must be at least 2, got {s}")
    if s > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {s} exceeds the exhaustive-search guard {MAX_DEGREE}")


def _has_split(pm: Premonoid, x: int, s: int) -> bool:
    cand = np.flatnonzero(pm.below[x])
    if len(cand) == 0:
        return False
    t = pm.monoid.table
    pairs = t[np.ix_(cand, cand)]
    if (pairs == x).any():
        return True
    if s >= 3:
        mids = np.unique(pairs)
        if (t[np.ix_(mids, cand)] == x).any():
            return True
    return False


def _find_split(pm: Premonoid, x: int, s: int, heights: np.ndarray | None = None):
    """Lexicographically smallest (k, y_1..y_k) with product x, each y_i a
    non-unit strictly below x; with ``heights`` the tuple must also satisfy
    sum(hgt(y_i)) <= hgt(x) + k - 2."""
    cand = np.flatnonzero(pm.below[x])
    if len(cand) == 0:
        return None
    t = pm.monoid.table
    hc = heights[cand] if heights is not None else None
    hit = t[np.ix_(cand, cand)] == x
    if heights is not None:
        hit &= (hc[:, None] + hc[None, :]) <= heights[x]
    found = np.argwhere(hit)
    if len(found):
        i, j = found[0]
        return (int(cand[i]), int(cand[j]))
    if s < 3:
        return None
    for y1 in cand:
        mids = t[y1, cand]
        hit = t[np.ix_(mids, cand)] == x
        if heights is not None:
            hit &= (heights[y1] + hc[:, None] + hc[None, :]) <= heights[x] + 1
        found = np.argwhere(hit)
        if len(found):
            i, j = found[0]
            return (int(y1), int(cand[i]), int(cand[j]))
    return None


def is_irreducible(pm: Premonoid, x: int, s: int = 2) -> bool:
    _check_degree(s)
    if pm.unit_mask[x]:
        return False
    return not _has_split(pm, x, s)


def is_atom(pm: Premonoid, x: int) -> bool:
    if pm.unit_mask[x]:
        return False
    nu = np.flatnonzero(pm.nonunit_mask)
    t = pm.monoid.table
    return not bool((t[np.ix_(nu, nu)] == x).any())


def units(pm: Premonoid) -> list[int]:
    return [int(i) for i in np.flatnonzero(pm.unit_mask)]


def quarks(pm: Premonoid) -> list[int]:
    return [int(i) for i in np.flatnonzero(pm.quark_mask)]


def irreducibles(pm: Premonoid, s: int = 2) -> list[int]:
    _check_degree(s)
    return [x for x in range(pm.size) if is_irreducible(pm, x, s)]


def atoms(pm: Premonoid) -> list[int]:
    return [x for x in range(pm.size) if is_atom(pm, x)]


def height(pm: Premonoid) -> HeightTable:
    """Longest strictly descending chain of non-units starting at each element.

    Memoized depth-first longest path over the strict relation restricted to
    non-units; units get 0.
    """
    n = pm.size
    below = pm.below
    h = np.zeros(n, dtype=np.int64)
    state = np.zeros(n, dtype=np.int8)      # 0 new, 1 on stack, 2 done
    state[pm.unit_mask] = 2
    kids_of: dict[int, np.ndarray] = {}
    for root in np.flatnonzero(pm.nonunit_mask):
        if state[root] == 2:
            continue
        state[root] = 1
        stack = [int(root)]
        while stack:
            x = stack[-1]
            kids = kids_of.get(x)
            if kids is None:
                kids = kids_of[x] = np.flatnonzero(below[x])
            st = state[kids]
            if (st == 1).any():
                raise CycleDetected(f"strict relation has a cycle through element {x}")
            fresh = kids[st == 0]
            if len(fresh):
                y = int(fresh[0])
                state[y] = 1
                stack.append(y)
                continue
            h[x] = 1 + (int(h[kids].max()) if len(kids) else 0)
            state[x] = 2
            stack.pop()
            del kids_of[x]
    return HeightTable(h)


def factor_into_irreducibles(pm: Premonoid, x: int, s: int = 2) -> Factorization:
    """Factor a non-unit into irreducibles of degree ``s`` by descending splits."""
    _check_degree(s)
    if pm.unit_mask[x]:
        raise NotANonUnit(f"element {x} is a unit; units factor as the empty product")
    cert = Factorization(target=x, factors=[])

    def expand(y):
        split = _find_split(pm, y, s)
        if split is None:
            cert.trace.append("irreducible")
            cert.factors.append(y)
            return
        cert.trace.append(f"split{len(split)}")
        cert.steps.append({"element": y, "parts": list(split)})
        for part in split:
            expand(part)

    expand(x)
    assert pm.monoid.product(cert.factors) == x
    return cert


def quark_bound(s: int, h: int) -> int:
    return (s - 1) * h - (s - 2)


def factor_into_quarks_bounded(pm: Premonoid, x: int, s: int = 2) -> Factorization:
    """Factor a non-unit into at most (s-1) hgt(x) - (s-2) quarks.

    Every expansion uses a split y_1..y_k (2 <= k <= s) of non-units strictly
    below the element with hgt(y_1) + ... + hgt(y_k) <= hgt + k - 2. The
    hypothesis is checked as the recursion meets each element.
    """
    _check_degree(s)
    if pm.unit_mask[x]:
        raise NotANonUnit(f"element {x} is a unit; units factor as the empty product")
    h = pm.heights.heights
    cert = Factorization(target=x, factors=[], bound=quark_bound(s, int(h[x])))

    def expand(y):
        if pm.quark_mask[y]:
            cert.trace.append("quark")
            cert.factors.append(y)
            return
        split = _find_split(pm, y, s, heights=h)
        if split is None:
            raise HypothesisViolation(y)
        k = len(split)
        hs = [int(h[p]) for p in split]
        cert.trace.append(f"split{k}")
        cert.steps.append({
            "element": y, "height": int(h[y]), "parts": list(split), "part_heights": hs,
            "height_sum": sum(hs), "allowed": int(h[y]) + k - 2,
        })
        for part in split:
            expand(part)

    expand(x)
    assert pm.monoid.product(cert.factors) == x
    assert cert.length <= cert.bound, (cert.length, cert.bound)
    return cert
