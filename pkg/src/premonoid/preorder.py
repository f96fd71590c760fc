"""Reflexive, transitive relations over a finite carrier ``{0, ..., size-1}``."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


@dataclass(frozen=True, eq=False)
class FinitePreorder:
    """Boolean relation with ``le[x, y]`` meaning x is below-or-equal y."""

    le: np.ndarray

    def __post_init__(self):
        le = np.asarray(self.le, dtype=bool)
        if le.ndim != 2 or le.shape[0] != le.shape[1] or le.shape[0] == 0:
            raise ValueError(f"preorder relation must be a non-empty square matrix, got {le.shape}")
        le.setflags(write=False)
        object.__setattr__(self, "le", le)

    @property
    def size(self) -> int:
        return self.le.shape[0]

    @cached_property
    def strict(self) -> np.ndarray:
        """``strict[x, y]`` iff x < y, i.e. le(x, y) and not le(y, x)."""
        s = self.le & ~self.le.T
        s.setflags(write=False)
        return s

    def leq(self, x: int, y: int) -> bool:
        return bool(self.le[x, y])

    def lt(self, x: int, y: int) -> bool:
        return bool(self.strict[x, y])

    def equivalent(self, x: int, y: int) -> bool:
        return bool(self.le[x, y] and self.le[y, x])

    def restrict(self, indices) -> FinitePreorder:
        idx = np.asarray(list(indices), dtype=np.intp)
        return FinitePreorder(self.le[np.ix_(idx, idx)])

    @classmethod
    def from_function(cls, size: int, le) -> FinitePreorder:
        return cls(np.array([[bool(le(x, y)) for y in range(size)] for x in range(size)]))

    @classmethod
    def equality(cls, size: int) -> FinitePreorder:
        return cls(np.eye(size, dtype=bool))


@dataclass
class PreorderReport:
    size: int
    reflexivity_violations: list[int] = field(default_factory=list)
    transitivity_violation: tuple[int, int, int] | None = None
    strict_acyclic: bool = True

    @property
    def valid(self) -> bool:
        return (not self.reflexivity_violations
                and self.transitivity_violation is None
                and self.strict_acyclic)

    def __bool__(self):
        return self.valid


def strict_is_acyclic(strict: np.ndarray) -> bool:
    """Kahn-style peeling: repeatedly drop elements with nothing strictly below."""
    alive = np.ones(strict.shape[0], dtype=bool)
    while alive.any():
        has_pred = (strict[np.ix_(alive, alive)]).any(axis=0)
        if has_pred.all():
            return False
        idx = np.flatnonzero(alive)
        alive[idx[~has_pred]] = False
    return True


def validate_preorder(p: FinitePreorder) -> PreorderReport:
    le = p.le
    report = PreorderReport(size=p.size)
    report.reflexivity_violations = [int(x) for x in np.flatnonzero(~np.diag(le))]
    # boolean composition through BLAS; exact since counts stay far below 2^24
    f = le.astype(np.float32)
    two_step = (f @ f) > 0
    bad = two_step & ~le
    if bad.any():
        a, c = (int(v) for v in np.argwhere(bad)[0])
        b = int(np.flatnonzero(le[a] & le[:, c])[0])
        report.transitivity_violation = (a, b, c)
    report.strict_acyclic = strict_is_acyclic(p.strict)
    return report
