"""Exact rational linear algebra on small square matrices.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator. Ranks and determinants go through
fraction-free (Bareiss) elimination on an integer rescaling of the rows.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, NotOrthogonal, ParseError, SingularMatrix, ZeroVector

QVector = tuple[Fraction, ...]


def qvector(values) -> QVector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class QMatrix:
    rows: tuple[QVector, ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("QMatrix must be square with dimension >= 1")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return matmul(self, other)
        return apply(self, other)

    def __sub__(self, other: QMatrix) -> QMatrix:
        _same_dim(self.n, other.n)
        return QMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> QMatrix:
        return QMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def column(self, j: int) -> QVector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> QMatrix:
        return QMatrix(tuple(self.column(j) for j in range(self.n)))

    T = property(transpose)

    def is_identity(self) -> bool:
        return self == identity(self.n)

    def tolist(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    def __str__(self):
        return "[" + "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows) + "]"


def _same_dim(a: int, b: int):
    if a != b:
        raise DimensionMismatch(f"dimension mismatch: {a} vs {b}")


def identity(n: int) -> QMatrix:
    return QMatrix(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))


def diag(*values) -> QMatrix:
    n = len(values)
    return QMatrix(tuple(tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(n))
                         for i in range(n)))


def basis_vector(n: int, i: int) -> QVector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    _same_dim(a.n, b.n)
    cols = [b.column(j) for j in range(b.n)]
    return QMatrix(tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols)
                         for r in a.rows))


def apply(a: QMatrix, v) -> QVector:
    _same_dim(a.n, len(v))
    return tuple(sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in a.rows)


def inner(u, v) -> Fraction:
    _same_dim(len(u), len(v))
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def _integer_rows(m: QMatrix) -> list[list[int]]:
    out = []
    for r in m.rows:
        scale = lcm(*(x.denominator for x in r))
        out.append([int(x * scale) for x in r])
    return out


def rank(m: QMatrix) -> int:
    """Rank by Bareiss elimination; row rescaling does not change it."""
    a = _integer_rows(m)
    n = m.n
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, n):
            aic = a[i][col]
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * p - aic * a[r][j]) // prev
            a[i][col] = 0
        prev = p
        r += 1
    return r


def determinant(m: QMatrix) -> Fraction:
    a = _integer_rows(m)
    scale = Fraction(1)
    for r in m.rows:
        scale *= lcm(*(x.denominator for x in r))
    n = m.n
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * Fraction(a[n - 1][n - 1]) / scale


def fix_rank(f: QMatrix) -> int:
    """Dimension of {x : f(x) = x}, i.e. n - rank(f - I)."""
    return f.n - rank(f - identity(f.n))


def orthogonality_defect(f: QMatrix):
    """First (i, j, value) where f^T f differs from I, or None."""
    g = matmul(f.transpose(), f)
    for i in range(f.n):
        for j in range(f.n):
            if g[i, j] != int(i == j):
                return (i, j, g[i, j])
    return None


def is_orthogonal(f: QMatrix) -> bool:
    return orthogonality_defect(f) is None


def is_reflection(f: QMatrix) -> bool:
    return is_orthogonal(f) and fix_rank(f) == f.n - 1


def require_orthogonal(f: QMatrix):
    bad = orthogonality_defect(f)
    if bad is not None:
        raise NotOrthogonal(*bad)


def reflection_across(u) -> QMatrix:
    """x -> x - 2<x,u>/<u,u> u, the reflection fixing the hyperplane orthogonal to u."""
    u = qvector(u)
    uu = inner(u, u)
    if uu == 0:
        raise ZeroVector("cannot reflect across the zero vector")
    n = len(u)
    return QMatrix(tuple(tuple(Fraction(int(i == j)) - 2 * u[i] * u[j] / uu for j in range(n))
                         for i in range(n)))


def is_rfix_quark_invertible(f: QMatrix) -> bool:
    """Closed-form quark test in the group of units: fix-rank n - 1."""
    if determinant(f) == 0:
        raise SingularMatrix("r.fix quark test needs an invertible matrix")
    return fix_rank(f) == f.n - 1


def random_reflection_vector(n: int, rng: random.Random, low: int = -3, high: int = 3) -> QVector:
    while True:
        v = [rng.randint(low, high) for _ in range(n)]
        if any(v):
            return qvector(v)


def random_rational_orthogonal(n: int, k: int, seed: int) -> QMatrix:
    """Product of k reflections across seeded random small-integer vectors."""
    if k < 0:
        raise ValueError("reflection count must be non-negative")
    rng = random.Random(seed)
    f = identity(n)
    for _ in range(k):
        f = matmul(f, reflection_across(random_reflection_vector(n, rng)))
    return f


_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` and insist on canonical form."""
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise ParseError(f"not a canonical rational: {text!r}")
    value = Fraction(text)
    if format_rational(value) != text:
        raise ParseError(f"not a canonical rational: {text!r} (canonical form {format_rational(value)!r})")
    return value


def matrix_to_json(m: QMatrix) -> dict:
    return {"n": m.n, "entries": m.tolist()}


def matrix_from_json(obj) -> QMatrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise ParseError("matrix JSON needs keys 'n' and 'entries'")
    n = obj["n"]
    entries = obj["entries"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("matrix JSON: 'n' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != n or any(
            not isinstance(r, list) or len(r) != n for r in entries):
        raise ParseError(f"matrix JSON: 'entries' must be {n} rows of {n} strings")
    return QMatrix(tuple(tuple(parse_rational(x) for x in r) for r in entries))
