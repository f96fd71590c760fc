"""Constructive factorizations: quasi-identities, transpositions, reflections.

Singular maps are factored by conjugating into a normal form, splitting the
normal form with explicit two- or three-factor formulas, conjugating the
parts back and recursing. Each part fixes strictly more points than the map
it came from, which is what bounds the recursion.

Normal form of a singular map alpha on {1..n} (1-based in comments):
fixed points are relabelled 1..d, the remaining image points d+1..r, and
the points outside the image r+1..n; inside each block labels keep their
original ascending order.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import linear as la
from . import transformations as tf
from .core import Factorization
from .errors import AlreadyIrreducible, IdentityInput, NotSingular
from .linear import QMatrix


class CaseTag(str, Enum):
    BASE = "Base"
    CASE1 = "Case1"
    CASE2A = "Case2a"
    CASE2B = "Case2b"


@dataclass(frozen=True)
class NormalizationCertificate:
    original: tuple[int, ...]
    conjugator: tuple[int, ...]    # new label -> original point
    normalized: tuple[int, ...]
    d: int
    r: int

    @property
    def n(self) -> int:
        return len(self.original)


def normalize(t) -> NormalizationCertificate:
    t = tuple(t)
    if tf.is_identity(t):
        raise IdentityInput("the identity has no normal form")
    if not tf.is_singular(t):
        raise NotSingular(f"{tf.format_images(t)} is a bijection")
    fixed = sorted(tf.fix_set(t))
    image = tf.image_set(t)
    moved_images = sorted(image.difference(fixed))
    outside = sorted(set(range(len(t))).difference(image))
    sigma = tuple(fixed + moved_images + outside)
    normalized = tf.compose(tf.inverse(sigma), tf.compose(t, sigma))
    cert = NormalizationCertificate(t, sigma, normalized, len(fixed), len(image))
    assert tf.conjugate(sigma, normalized) == t
    return cert


def _normal_form_split(a: tuple[int, ...]):
    """Split a normal-form map with at most n - 2 fixed points.

    Works on 1-based labels to keep the index arithmetic readable; returns
    0-based factor tuples and the case tag.
    """
    n = len(a)
    A = [None] + [x + 1 for x in a]           # A[i] = alpha(i), 1-based
    d = sum(1 for i in range(1, n + 1) if A[i] == i)
    image = set(A[1:])
    r = len(image)
    assert set(range(1, d + 1)) <= image and image == set(range(1, r + 1))

    def build(mapping):
        return tuple(mapping[i] - 1 for i in range(1, n + 1))

    beta = build({i: (i if i <= n - 1 else A[n]) for i in range(1, n + 1)})

    image_sq = {A[x] for x in image}
    if image_sq != image or r < n - 1:
        gamma = build({i: (i if i <= d or i == n else A[i]) for i in range(1, n + 1)})
        return [beta, gamma], CaseTag.CASE1

    assert d + 2 <= r == n - 1
    if A[n] <= d:
        k = min(i for i in range(d + 2, r + 1) if A[i] == d + 1)
        delta1 = tf.quasi_identity(n, n - 1, d)              # n -> d+1
        delta2 = tf.quasi_identity(n, d, A[d + 1] - 1)       # d+1 -> a_{d+1}
        eta = {}
        for i in range(1, n + 1):
            if i <= d + 1:
                eta[i] = i
            elif i == k:
                eta[i] = n
            elif i == n:
                eta[i] = A[n]
            else:
                eta[i] = A[i]
        return [delta1, delta2, build(eta)], CaseTag.CASE2A

    k = min(i for i in range(d + 1, r + 1) if i != A[n] and A[i] == A[n])
    zeta = {}
    for i in range(1, n + 1):
        if i <= d or i == n:
            zeta[i] = i
        elif i == k:
            zeta[i] = n
        else:
            zeta[i] = A[i]
    return [beta, build(zeta)], CaseTag.CASE2B


def howie_split(cert: NormalizationCertificate):
    """Factor list and case tag for the normalized map of ``cert``.

    Case 1 gives [beta, gamma], Case 2a [delta1, delta2, eta], Case 2b
    [beta, zeta]. Every part is singular, fixes strictly more points than the
    normalized map, and the parts compose back to it.
    """
    a = cert.normalized
    n = len(a)
    if tf.is_quasi_identity(a):
        raise AlreadyIrreducible(f"{tf.format_images(a)} is a quasi-identity")
    parts, tag = _normal_form_split(a)
    fix_a = tf.fix_set(a)
    assert tf.compose_all(parts, n) == a
    for p in parts:
        assert tf.is_singular(p) and fix_a < tf.fix_set(p)
    heights = [n - len(tf.fix_set(p)) for p in parts]
    extra = 1 if tag is CaseTag.CASE2A else 0
    assert sum(heights) == n - len(fix_a) + extra
    return parts, tag


def howie_bound(t) -> int:
    return 2 * (len(t) - len(tf.fix_set(t))) - 1


def howie_factor(t) -> Factorization:
    """Write a singular non-identity map as at most 2(n - |fix|) - 1 quasi-identities."""
    t = tuple(t)
    if tf.is_identity(t):
        raise IdentityInput("the identity is the empty product")
    if not tf.is_singular(t):
        raise NotSingular(f"{tf.format_images(t)} is a bijection")
    n = len(t)
    cert = Factorization(target=t, factors=[], bound=howie_bound(t))

    def expand(a):
        if tf.is_quasi_identity(a):
            cert.trace.append(CaseTag.BASE.value)
            cert.factors.append(a)
            return
        norm = normalize(a)
        parts, tag = howie_split(norm)
        back = [tf.conjugate(norm.conjugator, p) for p in parts]
        fix_a = tf.fix_set(a)
        heights = [n - len(tf.fix_set(p)) for p in back]
        assert all(fix_a < tf.fix_set(p) for p in back)
        cert.trace.append(tag.value)
        cert.steps.append({
            "element": a, "case": tag.value, "parts": back,
            "height": n - len(fix_a), "part_heights": heights,
        })
        for p in back:
            expand(p)

    expand(t)
    assert all(tf.is_quasi_identity(q) for q in cert.factors)
    assert tf.compose_all(cert.factors, n) == t
    assert cert.length <= cert.bound, (tf.format_images(t), cert.length, cert.bound)
    return cert


def transposition_bound(p) -> int:
    return len(p) - len(tf.fix_set(p)) - 1


def transposition_factor(p) -> Factorization:
    """Peel off (j p(j)) for the smallest moved point j until a transposition remains."""
    p = tuple(p)
    if not tf.is_permutation(p):
        raise ValueError(f"{tf.format_images(p)} is not a permutation")
    if tf.is_identity(p):
        raise IdentityInput("the identity is the empty product")
    n = len(p)
    cert = Factorization(target=p, factors=[], bound=transposition_bound(p))
    rest = p
    while not tf.is_transposition(rest):
        j = min(i for i in range(n) if rest[i] != i)
        beta = tf.transposition(n, j, rest[j])
        nxt = tf.compose(beta, rest)
        assert tf.fix_set(rest) < tf.fix_set(nxt)
        cert.factors.append(beta)
        cert.trace.append(f"peel {j + 1}")
        rest = nxt
    cert.factors.append(rest)
    cert.trace.append("transposition")
    assert tf.compose_all(cert.factors, n) == p
    assert cert.length <= cert.bound
    return cert


def cartan_dieudonne_factor(f: QMatrix) -> Factorization:
    """Write an orthogonal matrix as at most n - fix_rank(f) reflections.

    While f is not the identity: take the first standard basis vector w with
    f(w) != w, reflect across u = f(w) - w and continue with g f. The new map
    fixes w and everything f fixed, so the fix-rank grows at every step.
    """
    la.require_orthogonal(f)
    n = f.n
    cert = Factorization(target=f, factors=[], bound=n - la.fix_rank(f))
    cur = f
    rank = la.fix_rank(cur)
    while not cur.is_identity():
        i = next(i for i in range(n) if cur.column(i) != la.basis_vector(n, i))
        w = la.basis_vector(n, i)
        u = tuple(a - b for a, b in zip(la.apply(cur, w), w))
        g = la.reflection_across(u)
        cur = la.matmul(g, cur)
        new_rank = la.fix_rank(cur)
        assert new_rank > rank
        rank = new_rank
        cert.factors.append(g)
        cert.trace.append(f"pivot e{i + 1}")
    product = la.identity(n)
    for g in cert.factors:
        product = la.matmul(product, g)
    assert product == f
    assert cert.length <= cert.bound <= n
    return cert
