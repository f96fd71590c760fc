import numpy as np
import pytest

from premonoid import rfix
from premonoid import transformations as tf
from premonoid.errors import NotSingular
from premonoid.monoids import full_transformation_monoid, singular_submonoid

from conftest import T


def test_rfix_set_examples():
    m = full_transformation_monoid(2)
    assert rfix.rfix_set(m, m.index((0, 1))) == frozenset(range(4))
    assert rfix.rfix_set(m, m.index((0, 0))) == {m.index((0, 0))}
    assert rfix.rfix_set(m, m.index((1, 1))) == {m.index((1, 1))}


def test_rfix_preorder_t2():
    m = full_transformation_monoid(2)
    le = rfix.rfix_preorder(m)
    e, a, b = m.index((0, 1)), m.index((0, 0)), m.index((1, 1))
    assert not le.leq(a, e)
    assert le.leq(e, a)
    assert not le.leq(a, b) and not le.leq(b, a)


def test_fix_preorder_examples():
    p = fix_t3 = rfix.fix_preorder(3)
    m = full_transformation_monoid(3)
    f, g = m.index(T("1,1,3")), m.index(T("2,3,2"))
    assert p.leq(f, g)
    assert not fix_t3.leq(g, f)
    assert all(p.leq(x, x) for x in range(m.size))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rfix_equals_fix_preorder(n):
    m = full_transformation_monoid(n)
    assert np.array_equal(rfix.rfix_preorder(m).le, rfix.fix_preorder(n).le)


def test_definitional_and_closed_form_restrictions_agree():
    for restriction in ("singular", "invertible"):
        spec = rfix.RfixPremonoidSpec(3, restriction)
        assert np.array_equal(spec.build(definitional=True).order.le, spec.build().order.le)


def test_restriction_uses_ambient_preorder():
    # inside S_3 alone every non-identity permutation right-fixes only the
    # identity, so all of them would be equivalent; the ambient T_3 relation
    # separates them by fixed points
    from premonoid.monoids import symmetric_group
    own = rfix.rfix_preorder(symmetric_group(3))
    ambient = rfix.permutation_rfix_premonoid(3, definitional=True).order
    assert own.le[1:, 1:].all()
    assert not np.array_equal(own.le, ambient.le)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_singular_carrier_own_rfix_matches_ambient(n):
    own = rfix.rfix_preorder(singular_submonoid(n))
    assert np.array_equal(own.le, rfix.singular_rfix_premonoid(n).order.le)


def test_height_formulas():
    assert rfix.singular_height_formula(T("1,1,1")) == 2
    assert rfix.singular_height_formula(tf.identity(3)) == 0
    assert rfix.permutation_height_formula(T("2,3,1")) == 2
    assert rfix.permutation_height_formula(tf.identity(3)) == 0
    with pytest.raises(NotSingular):
        rfix.singular_height_formula(T("2,1,3"))


def test_quark_predicates():
    assert rfix.is_rfix_quark_singular(T("1,1,3"))
    assert rfix.is_rfix_quark_permutation(T("2,1,3"))
    assert not rfix.is_rfix_quark_permutation(T("2,3,1"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_heights_match_formulas(n):
    for pm, formula in ((rfix.singular_rfix_premonoid(n), rfix.singular_height_formula),
                        (rfix.permutation_rfix_premonoid(n), rfix.permutation_height_formula)):
        for x, t in enumerate(pm.monoid.elements):
            assert pm.heights[x] == formula(t)
