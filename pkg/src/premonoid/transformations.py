"""Self-maps of {0, ..., n-1} stored as image tuples.

A transformation ``t`` is a tuple with ``t[i]`` the image of point ``i``.
Composition follows the convention ``compose(f, g) == f o g``: ``g`` is
applied first. Points are 0-based here; the 1-based text form used at user
boundaries is handled by :func:`parse_images` and :func:`format_images`.
"""
from __future__ import annotations

from itertools import compress, permutations, product
from operator import eq

from .errors import ParseError

Transformation = tuple[int, ...]
Permutation = tuple[int, ...]


def identity(n: int) -> Transformation:
    return tuple(range(n))


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Return f o g, i.e. x -> f(g(x))."""
    return tuple(map(f.__getitem__, g))


def compose_all(factors, n: int) -> Transformation:
    """Ordered product of a factor list, rightmost factor applied first."""
    result = identity(n)
    for f in reversed(list(factors)):
        result = compose(f, result)
    return result


def fix_set(t: Transformation) -> frozenset[int]:
    return frozenset(compress(range(len(t)), map(eq, t, range(len(t)))))


def fixed_count(t: Transformation) -> int:
    return sum(map(eq, t, range(len(t))))


def image_set(t: Transformation) -> frozenset[int]:
    return frozenset(t)


def fix_mask(t: Transformation) -> int:
    """Fixed points as a bitmask, bit i set iff t(i) = i."""
    m = 0
    for i, x in enumerate(t):
        if i == x:
            m |= 1 << i
    return m


def is_permutation(t: Transformation) -> bool:
    return len(set(t)) == len(t)


def is_singular(t: Transformation) -> bool:
    return not is_permutation(t)


def is_identity(t: Transformation) -> bool:
    return fixed_count(t) == len(t)


def is_idempotent(t: Transformation) -> bool:
    return compose(t, t) == t


def is_quasi_identity(t: Transformation) -> bool:
    """True iff t fixes exactly n - 1 points.

    Such a map sends its single moved point onto a fixed one, so it is
    idempotent and singular.
    """
    n = len(t)
    return n > 0 and fixed_count(t) == n - 1


def is_transposition(t: Transformation) -> bool:
    return fixed_count(t) == len(t) - 2 and is_permutation(t)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(sigma: Permutation, t: Transformation) -> Transformation:
    """sigma o t o sigma^-1."""
    return compose(sigma, compose(t, inverse(sigma)))


def transposition(n: int, i: int, j: int) -> Permutation:
    if i == j:
        raise ValueError("a transposition swaps two distinct points")
    t = list(range(n))
    t[i], t[j] = j, i
    return tuple(t)


def quasi_identity(n: int, moved: int, target: int) -> Transformation:
    """The quasi-identity sending ``moved`` to ``target`` and fixing the rest."""
    if moved == target:
        raise ValueError("a quasi-identity moves exactly one point")
    t = list(range(n))
    t[moved] = target
    return tuple(t)


def all_transformations(n: int):
    """All n^n maps in lexicographic image order."""
    return product(range(n), repeat=n)


def all_permutations(n: int):
    return permutations(range(n))


def quasi_identities(n: int) -> list[Transformation]:
    return [quasi_identity(n, i, j) for i in range(n) for j in range(n) if i != j]


def transpositions(n: int) -> list[Permutation]:
    return [transposition(n, i, j) for i in range(n) for j in range(i + 1, n)]


def lex_index(t: Transformation) -> int:
    """Position of t in :func:`all_transformations` order."""
    n = len(t)
    idx = 0
    for x in t:
        idx = idx * n + x
    return idx


def parse_images(text: str, n: int | None = None) -> Transformation:
    """Parse comma-separated 1-based images such as ``"2,3,2"``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        images = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"images: expected comma-separated integers, got {text!r}") from None
    size = len(images) if n is None else n
    if n is not None and len(images) != n:
        raise ParseError(f"images: expected {n} entries, got {len(images)}")
    if any(x < 1 or x > size for x in images):
        raise ParseError(f"images: every entry must lie in 1..{size}")
    return tuple(x - 1 for x in images)


def format_images(t: Transformation) -> str:
    return ",".join(str(x + 1) for x in t)


def one_based(t: Transformation) -> list[int]:
    return [x + 1 for x in t]
