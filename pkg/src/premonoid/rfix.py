"""The r.fix preorder and its closed forms on transformation monoids.

For a monoid H, rfix(a) = {x in H : ax = x} and b <= c iff rfix(c) is a
subset of rfix(b). On the full transformation monoid this collapses to a
comparison of fixed-point sets, fix(g) subset of fix(f) iff f <= g, which is
what :func:`fix_preorder` computes. :func:`rfix_preorder` is the literal
definition and is only meant for cross-checking at small n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from . import config
from . import transformations as tf
from .core import Premonoid
from .errors import NotSingular, SizeCapExceeded
from .monoids import (FiniteMonoid, TransformationMonoid, full_transformation_monoid,
                      singular_submonoid, symmetric_group)
from .preorder import FinitePreorder

Restriction = Literal["singular", "invertible", "all"]


def rfix_set(m: FiniteMonoid, a: int) -> frozenset[int]:
    """Indices x with a.x = x."""
    if m.size <= config.max_table():
        row = m.table[a]
        return frozenset(int(x) for x in np.flatnonzero(row == np.arange(m.size)))
    return frozenset(x for x in range(m.size) if m.mul(a, x) == x)


def rfix_preorder(m: FiniteMonoid) -> FinitePreorder:
    t = m.table
    n = m.size
    fixers = (t == np.arange(n)[None, :]).astype(np.float32)    # fixers[a, x] iff a.x = x
    # missing[c, b] = |rfix(c) minus rfix(b)|, exact in float32 for these sizes
    missing = fixers @ (1.0 - fixers).T
    return FinitePreorder((missing == 0).T)


PREORDER_CAP = 8192


def fix_preorder_of(m: TransformationMonoid) -> FinitePreorder:
    """f <= g iff fix(g) is a subset of fix(f), over the carrier of ``m``."""
    if m.size > PREORDER_CAP:
        raise SizeCapExceeded(f"fix preorder over {m.size} elements exceeds the preorder cap")
    masks = m.fix_masks
    le = (masks[None, :] & ~masks[:, None]) == 0
    return FinitePreorder(le)


def fix_preorder(n: int) -> FinitePreorder:
    return fix_preorder_of(full_transformation_monoid(n))


@lru_cache(maxsize=4)
def _full_rfix(n: int):
    full = full_transformation_monoid(n)
    return full, rfix_preorder(full)


@dataclass(frozen=True)
class RfixPremonoidSpec:
    n: int
    restriction: Restriction = "singular"

    def carrier(self) -> TransformationMonoid:
        if self.restriction == "singular":
            return singular_submonoid(self.n)
        if self.restriction == "invertible":
            return symmetric_group(self.n)
        if self.restriction == "all":
            return full_transformation_monoid(self.n)
        raise ValueError(f"unknown restriction {self.restriction!r}")

    def build(self, definitional: bool = False) -> Premonoid:
        """Restricted r.fix premonoid.

        With ``definitional`` the preorder is obtained from right-fixer sets of
        the full T_n and then restricted; otherwise from fixed-point sets.
        """
        sub = self.carrier()
        if definitional:
            full, order = _full_rfix(self.n)
            order = order.restrict(full.index(e) for e in sub.elements)
        else:
            order = fix_preorder_of(sub)
        return Premonoid(sub, order, name=f"rfix[{self.restriction}](T_{self.n})")


def singular_rfix_premonoid(n: int, definitional: bool = False) -> Premonoid:
    return RfixPremonoidSpec(n, "singular").build(definitional)


def permutation_rfix_premonoid(n: int, definitional: bool = False) -> Premonoid:
    return RfixPremonoidSpec(n, "invertible").build(definitional)


def singular_height_formula(t) -> int:
    """n - |fix(t)| for singular t; 0 for the identity."""
    if tf.is_identity(t):
        return 0
    if not tf.is_singular(t):
        raise NotSingular(f"{tf.format_images(t)} is a non-identity bijection")
    return len(t) - len(tf.fix_set(t))


def permutation_height_formula(p) -> int:
    """n - 1 - |fix(p)| for a non-identity permutation; 0 for the identity."""
    if not tf.is_permutation(p):
        raise ValueError(f"{tf.format_images(p)} is not a permutation")
    if tf.is_identity(p):
        return 0
    return len(p) - 1 - len(tf.fix_set(p))


def is_rfix_quark_singular(t) -> bool:
    return tf.is_quasi_identity(t)


def is_rfix_quark_permutation(p) -> bool:
    return tf.is_transposition(p)
