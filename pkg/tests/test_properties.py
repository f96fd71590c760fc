from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from premonoid import linear as la
from premonoid import transformations as tf
from premonoid.factorizers import cartan_dieudonne_factor, howie_factor, normalize, transposition_factor
from premonoid.monoids import divisibility_preorder, full_transformation_monoid, reduced_power_monoid
from premonoid.oracle import base_monoid


def maps(min_n=1, max_n=7):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(tuple))


def perms(min_n=1, max_n=8):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(range(n)).map(tuple))


def singular_maps(max_n=8):
    return maps(2, max_n).filter(tf.is_singular)


def pointwise(f, g):
    return tuple(f[g[x]] for x in range(len(g)))


# transformations

@given(singular_maps())
def test_normal_form_shape(t):
    c = normalize(t)
    a = c.normalized
    assert tf.conjugate(c.conjugator, a) == t
    assert tf.fix_set(a) == set(range(c.d))
    assert tf.image_set(a) == set(range(c.r))
    assert len(tf.fix_set(a)) == len(tf.fix_set(t))


@given(singular_maps(9))
@settings(max_examples=200)
def test_howie_factor_random(t):
    cert = howie_factor(t)
    n = len(t)
    assert all(tf.fixed_count(q) == n - 1 for q in cert.factors)
    out = tf.identity(n)
    for q in reversed(cert.factors):
        out = pointwise(q, out)
    assert out == t
    assert cert.length <= 2 * (n - tf.fixed_count(t)) - 1


@given(perms(2, 9))
def test_transposition_factor_random(p):
    assume(not tf.is_identity(p))
    cert = transposition_factor(p)
    n = len(p)
    out = tf.identity(n)
    for q in reversed(cert.factors):
        out = pointwise(q, out)
    assert out == p
    assert all(tf.is_transposition(q) for q in cert.factors)
    assert cert.length <= n - tf.fixed_count(p) - 1


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.permutations(range(n)).map(tuple),
    st.integers(0, n - 1), st.integers(0, n - 2))))
def test_conjugation_preserves_quasi_identities(args):
    sigma, moved, shift = args
    n = len(sigma)
    target = (moved + 1 + shift) % n
    q = tf.quasi_identity(n, moved, target)
    assert tf.is_quasi_identity(tf.conjugate(sigma, q))


@given(st.data())
def test_monoid_op_matches_pointwise_composition(data):
    n = data.draw(st.integers(1, 4))
    m = full_transformation_monoid(n)
    i = data.draw(st.integers(0, m.size - 1))
    j = data.draw(st.integers(0, m.size - 1))
    f, g = m.elements[i], m.elements[j]
    assert m.elements[m.mul(i, j)] == pointwise(f, g)
    assert m.elements[int(m.table[i, j])] == pointwise(f, g)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(tuple),
    st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(tuple))))
def test_singular_maps_form_an_ideal(pair):
    f, g = pair
    if tf.is_singular(f) or tf.is_singular(g):
        assert tf.is_singular(tf.compose(f, g))


@given(st.sampled_from(["Z2", "Z3", "Z2xZ2", "S3"]))
@settings(max_examples=10)
def test_power_monoid_divisibility_refines_inclusion(name):
    h = reduced_power_monoid(base_monoid(name))
    le = divisibility_preorder(h)
    for x in range(h.size):
        for y in range(h.size):
            if le.leq(x, y):
                assert set(h.elements[x]) <= set(h.elements[y])


# exact linear algebra, checked against a plain Gaussian elimination

def gauss_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(len(a[0]) if a else 0):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                factor = a[i][col] / a[rank][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def null_space(rows):
    """Basis of {v : rows v = 0} via reduced row echelon form."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a[0])
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        a[rank] = [x / a[rank][col] for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][free]
        basis.append(v)
    return basis


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def square(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 5).flatmap(square))
def test_rank_matches_gaussian_elimination(rows):
    assert la.rank(la.QMatrix(rows)) == gauss_rank(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), st.permutations(range(n)),
                                                     st.permutations(range(n)), rationals)))
def test_rank_invariant_under_invertible_row_and_column_operations(args):
    rows, p, q, c = args
    n = len(rows)
    a = la.QMatrix(rows)
    pm = la.QMatrix([[int(p[i] == j) for j in range(n)] for i in range(n)])
    qm = la.QMatrix([[int(q[i] == j) for j in range(n)] for i in range(n)])
    e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n > 1:
        e[0][1] = c                                   # unipotent, always invertible
    em = la.QMatrix(e)
    assert la.rank(pm @ em @ a @ qm) == la.rank(a)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_determinant_is_multiplicative(pair):
    a, b = (la.QMatrix(x) for x in pair)
    assert la.determinant(a @ b) == la.determinant(a) * la.determinant(b)


@given(st.integers(2, 5), st.integers(0, 5), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_cd_pivot_vector_is_orthogonal_to_fixed_space(n, k, seed):
    f = la.random_rational_orthogonal(n, min(k, n), seed)
    cur = f
    for g in cartan_dieudonne_factor(f).factors:
        fixed = null_space((cur - la.identity(n)).rows)
        # g reflects across u = cur(w) - w; its -1 eigenvector spans u
        u = null_space([[g[i, j] + int(i == j) for j in range(n)] for i in range(n)])
        assert len(u) == 1
        for v in fixed:
            assert la.inner(u[0], v) == 0
        cur = la.reflection_across(u[0]) @ cur
    assert cur.is_identity()


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_reflection_is_orthogonal_and_involutive(v):
    assume(any(v))
    r = la.reflection_across(v)
    assert la.is_reflection(r)
    assert r @ r == la.identity(len(v))
    assert r @ tuple(Fraction(x) for x in v) == tuple(Fraction(-x) for x in v)


@given(rationals)
def test_rational_text_round_trip(x):
    assert la.parse_rational(la.format_rational(x)) == x
