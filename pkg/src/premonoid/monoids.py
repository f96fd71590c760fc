"""Concrete finite monoids, the divisibility preorder, and monoid predicates.

Every monoid speaks carrier indices: elements are addressed by their
position in ``FiniteMonoid.elements`` and ``mul(i, j)`` returns the index of
the product. Transformation monoids are rule-backed (products are computed
by composing image tuples); a Cayley table is materialized lazily, and only
below the ``PREMONOID_MAX_TABLE`` cap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import factorial
from typing import Callable, Hashable, Sequence

import numpy as np

from . import config
from . import transformations as tf
from .errors import ParseError, PremonoidError, SizeCapExceeded
from .preorder import FinitePreorder

ASSOCIATIVITY_CAP = 256


class FiniteMonoid:
    """Enumerated carrier, a product rule on indices, and an identity index."""

    def __init__(self, elements: Sequence[Hashable], op: Callable[[int, int], int],
                 identity: int, name: str = "", table: np.ndarray | None = None):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise PremonoidError("carrier elements must be distinct")
        self._op = op
        self.identity = identity
        self.name = name
        if table is not None:
            table = np.asarray(table, dtype=np.int32)
            table.setflags(write=False)
            self.__dict__["table"] = table

    def __repr__(self):
        return f"FiniteMonoid({self.name or '?'}, size={self.size})"

    def __len__(self):
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"{element!r} is not in the carrier of {self.name or 'monoid'}") from None

    def __contains__(self, element) -> bool:
        return element in self._index

    def mul(self, i: int, j: int) -> int:
        return self._op(i, j)

    def product(self, indices) -> int:
        acc = self.identity
        for i in indices:
            acc = self._op(acc, i)
        return acc

    @cached_property
    def table(self) -> np.ndarray:
        n = self.size
        if n > config.max_table():
            raise SizeCapExceeded(
                f"Cayley table of {self.name or 'monoid'} has {n} rows; cap is {config.max_table()}")
        t = self._build_table()
        t.setflags(write=False)
        return t

    def _build_table(self) -> np.ndarray:
        n = self.size
        return np.array([[self._op(i, j) for j in range(n)] for i in range(n)], dtype=np.int32)

    @cached_property
    def unit_indices(self) -> tuple[int, ...]:
        """Indices of the group of units: x with xy = yx = 1 for some y."""
        t = self.table
        e = self.identity
        right = (t == e)
        both = right & right.T
        return tuple(int(i) for i in np.flatnonzero(both.any(axis=1)))

    def is_unit(self, i: int) -> bool:
        return i in set(self.unit_indices)

    def check_identity(self) -> bool:
        e = self.identity
        ar = np.arange(self.size)
        t = self.table
        return bool((t[e] == ar).all() and (t[:, e] == ar).all())

    def associativity_witness(self) -> tuple[int, int, int] | None:
        if self.size > ASSOCIATIVITY_CAP:
            raise SizeCapExceeded(f"associativity check is capped at {ASSOCIATIVITY_CAP} elements")
        t = self.table
        left = t[t, :]                  # left[a, b, c] = (ab)c
        right = t[:, t]                 # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            return tuple(int(v) for v in bad[0])
        return None

    def submonoid(self, indices, name: str = "") -> FiniteMonoid:
        """Submonoid on the given carrier indices (kept in the given order)."""
        idx = list(indices)
        pos = {g: k for k, g in enumerate(idx)}
        if self.identity not in pos:
            raise PremonoidError("a submonoid must contain the identity")
        parent = self

        def op(i, j):
            return pos[parent.mul(idx[i], idx[j])]

        return FiniteMonoid([self.elements[g] for g in idx], op, pos[self.identity],
                            name=name or f"sub({self.name})")


class TransformationMonoid(FiniteMonoid):
    """A monoid of self-maps of {0..n-1} under f.g = f o g (g first)."""

    def __init__(self, n: int, elements, name: str = ""):
        self.n = n
        elements = [tuple(e) for e in elements]
        full = len(elements) == n ** n and all(tf.lex_index(e) == k for k, e in enumerate(elements))
        self._full = full
        if full:
            def op(i, j):
                return tf.lex_index(tf.compose(self.elements[i], self.elements[j]))
        else:
            def op(i, j):
                return self._index[tf.compose(self.elements[i], self.elements[j])]
        super().__init__(elements, op, 0, name=name)
        self.identity = self.index(tf.identity(n))

    def compose(self, f, g) -> tuple[int, ...]:
        return tf.compose(f, g)

    def _build_table(self) -> np.ndarray:
        n, size = self.n, self.size
        E = np.array(self.elements, dtype=np.int64).reshape(size, n)
        weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        lookup = np.full(n ** n, -1, dtype=np.int64)
        lookup[E @ weights] = np.arange(size)
        table = np.empty((size, size), dtype=np.int32)
        for i in range(size):
            codes = E[i][E] @ weights     # row g -> code of (e_i o e_g)
            row = lookup[codes]
            if (row < 0).any():
                raise PremonoidError(f"{self.name}: carrier not closed under composition")
            table[i] = row
        return table

    @cached_property
    def fix_masks(self) -> np.ndarray:
        return np.array([tf.fix_mask(e) for e in self.elements], dtype=np.int64)

    @cached_property
    def fix_sizes(self) -> np.ndarray:
        return np.array([len(tf.fix_set(e)) for e in self.elements], dtype=np.int64)


def _check_n(n: int):
    if n < 1:
        raise PremonoidError("n must be a positive count")
    if n > config.max_tn():
        raise SizeCapExceeded(f"n = {n} exceeds PREMONOID_MAX_TN = {config.max_tn()}")


def full_transformation_monoid(n: int) -> TransformationMonoid:
    _check_n(n)
    return TransformationMonoid(n, tf.all_transformations(n), name=f"T_{n}")


def symmetric_group(n: int) -> TransformationMonoid:
    _check_n(n)
    return TransformationMonoid(n, tf.all_permutations(n), name=f"S_{n}")


def singular_submonoid(n: int) -> TransformationMonoid:
    """Non-bijective maps plus the identity, in lexicographic image order."""
    _check_n(n)
    elements = [t for t in tf.all_transformations(n) if tf.is_singular(t) or tf.is_identity(t)]
    return TransformationMonoid(n, elements, name=f"T_{n}^sing")


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([()], lambda i, j: 0, 0, name="1")


def cyclic_group(k: int) -> FiniteMonoid:
    """Z/k under addition; elements are the residues 0..k-1."""
    if k < 1:
        raise PremonoidError("cyclic group order must be positive")
    return FiniteMonoid(range(k), lambda i, j: (i + j) % k, 0, name=f"Z/{k}")


def direct_product(a: FiniteMonoid, b: FiniteMonoid) -> FiniteMonoid:
    nb = b.size
    elements = [(x, y) for x in a.elements for y in b.elements]

    def op(i, j):
        return a.mul(i // nb, j // nb) * nb + b.mul(i % nb, j % nb)

    return FiniteMonoid(elements, op, a.identity * nb + b.identity, name=f"{a.name}x{b.name}")


def power_set_union_monoid(k: int) -> FiniteMonoid:
    """(P({1..k}), union); elements are sorted tuples, identity is the empty set."""
    if k > 12:
        raise SizeCapExceeded("power set monoid is capped at k = 12")
    subsets = [c for r in range(k + 1) for c in combinations(range(1, k + 1), r)]
    index = {s: i for i, s in enumerate(subsets)}

    def op(i, j):
        return index[tuple(sorted(set(subsets[i]) | set(subsets[j])))]

    return FiniteMonoid(subsets, op, 0, name=f"P({k}),union")


def reduced_power_monoid(m: FiniteMonoid) -> FiniteMonoid:
    """Subsets of ``m`` containing its identity, under setwise product.

    Elements are sorted tuples of base carrier indices; ``{1_M}`` comes first,
    then subsets ordered by size and lexicographically.
    """
    if m.size > config.max_power_base():
        raise SizeCapExceeded(
            f"reduced power monoid base has {m.size} elements; cap is {config.max_power_base()}")
    e = m.identity
    others = [x for x in range(m.size) if x != e]
    subsets = [tuple(sorted((e,) + c)) for r in range(len(others) + 1)
               for c in combinations(others, r)]
    index = {s: i for i, s in enumerate(subsets)}
    base = m.table

    def op(i, j):
        prod = {int(base[x, y]) for x in subsets[i] for y in subsets[j]}
        return index[tuple(sorted(prod))]

    return FiniteMonoid(subsets, op, 0, name=f"P_fin,1({m.name})")


def monoid_from_table(table, name: str = "table") -> FiniteMonoid:
    """Table-backed monoid; identity is inferred and associativity verified."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ParseError("table must be a non-empty square array")
    n = t.shape[0]
    if (t < 0).any() or (t >= n).any():
        raise ParseError(f"table entries must lie in 0..{n - 1}")
    ar = np.arange(n)
    ids = [e for e in range(n) if (t[e] == ar).all() and (t[:, e] == ar).all()]
    if not ids:
        raise ParseError("table has no two-sided identity")
    tab = t.astype(np.int32)
    m = FiniteMonoid(range(n), lambda i, j: int(tab[i, j]), ids[0], name=name, table=tab)
    bad = m.associativity_witness()
    if bad is not None:
        raise ParseError(f"table is not associative at (x, y, z) = {bad}")
    return m


def parse_table_text(text: str, name: str = "table") -> FiniteMonoid:
    """First line N, then N rows of N indices; row x, column y holds x.y."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise ParseError("table file: first line must hold the carrier size N")
    try:
        n = int(lines[0][0])
        rows = [[int(v) for v in ln] for ln in lines[1:]]
    except ValueError:
        raise ParseError("table file: entries must be integers") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"table file: expected {n} rows of {n} entries")
    return monoid_from_table(rows, name=name)


def divisibility_preorder(m: FiniteMonoid) -> FinitePreorder:
    """x <= y iff y lies in HxH."""
    t = m.table
    n = m.size
    le = np.zeros((n, n), dtype=bool)
    for x in range(n):
        left = t[:, x]                 # u.x for every u
        le[x, np.unique(t[left, :])] = True
    return FinitePreorder(le)


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive predicate; ``witness`` is set on failure."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def is_dedekind_finite(m: FiniteMonoid) -> Check:
    t = m.table
    units = np.zeros(m.size, dtype=bool)
    units[list(m.unit_indices)] = True
    prod_unit = units[t]
    bad = prod_unit & ~(units[:, None] & units[None, :])
    if bad.any():
        return Check(False, tuple(int(v) for v in np.argwhere(bad)[0]))
    return Check(True)


def is_acyclic(m: FiniteMonoid) -> Check:
    """uxv != x whenever u or v is a non-unit; witness is (u, x, v)."""
    t = m.table
    n = m.size
    units = np.zeros(n, dtype=bool)
    units[list(m.unit_indices)] = True
    either_nonunit = ~(units[:, None] & units[None, :])     # indexed [u, v]
    for x in range(n):
        ux = t[:, x]
        uxv = t[ux, :]                                       # [u, v]
        hit = (uxv == x) & either_nonunit
        if hit.any():
            u, v = np.argwhere(hit)[0]
            return Check(False, (int(u), x, int(v)))
    return Check(True)


def is_unit_cancellative(m: FiniteMonoid) -> Check:
    """xy != x != yx whenever y is a non-unit; witness is (x, y)."""
    t = m.table
    n = m.size
    units = np.zeros(n, dtype=bool)
    units[list(m.unit_indices)] = True
    ar = np.arange(n)[:, None]
    bad = ((t == ar) | (t.T == ar)) & ~units[None, :]        # [x, y]
    if bad.any():
        return Check(False, tuple(int(v) for v in np.argwhere(bad)[0]))
    return Check(True)


def is_cancellative(m: FiniteMonoid) -> Check:
    """xz = yz or zx = zy forces x = y; witness is (x, y, z) with x != y."""
    t = m.table
    n = m.size
    for z in range(n):
        for col in (t[:, z], t[z, :]):
            vals, first, counts = np.unique(col, return_index=True, return_counts=True)
            dup = np.flatnonzero(counts > 1)
            if len(dup):
                v = vals[dup[0]]
                x, y = np.flatnonzero(col == v)[:2]
                return Check(False, (int(x), int(y), z))
    return Check(True)


def singular_carrier_size(n: int) -> int:
    return n ** n - factorial(n) + 1
