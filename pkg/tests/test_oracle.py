import csv
import io
import json

import pytest

from premonoid import oracle
from premonoid import transformations as tf
from premonoid.errors import SizeCapExceeded
from premonoid.monoids import cyclic_group, full_transformation_monoid

from conftest import T


def test_bfs_examples_t3():
    m = full_transformation_monoid(3)
    gens = [m.index(q) for q in tf.quasi_identities(3)]
    assert oracle.min_factorization_length(m, gens, m.identity).min_length == 0
    assert oracle.min_factorization_length(m, gens, m.identity).witness == []
    assert oracle.min_factorization_length(m, gens, m.index(T("1,1,3"))).min_length == 1
    res = oracle.min_factorization_length(m, gens, m.index(T("2,3,2")))
    assert res.min_length == 3
    assert m.product(res.witness) == m.index(T("2,3,2"))


def test_two_quasi_identities_fix_at_least_n_minus_2_points():
    # the hand argument behind min length 3 for fixed-point-free maps in T_3
    qs = tf.quasi_identities(3)
    assert min(tf.fixed_count(tf.compose(a, b)) for a in qs for b in qs) == 1


def test_unreachable_is_reported():
    m = full_transformation_monoid(3)
    gens = [m.index(q) for q in tf.quasi_identities(3)]
    res = oracle.min_factorization_length(m, gens, m.index(T("2,1,3")))
    assert res.min_length is None and not res.reachable and res.witness == []


def test_bfs_on_cyclic_group():
    z = cyclic_group(5)
    res = oracle.min_factorization_length(z, [1], 3)
    assert res.min_length == 3 and res.witness == [1, 1, 1]


def test_bfs_witnesses_recompose_everywhere():
    bfs = oracle.quasi_identity_bfs(4)
    m = bfs.monoid
    for x in bfs.reachable:
        word = bfs.word(x)
        assert len(word) == bfs.dist[x]
        assert m.product(word) == x


def test_reachable_sets():
    for n in range(1, 5):
        bfs = oracle.quasi_identity_bfs(n)
        want = {i for i, t in enumerate(bfs.monoid.elements) if tf.is_singular(t) or tf.is_identity(t)}
        assert bfs.reachable == want
        s = oracle.transposition_bfs(n)
        assert len(s.reachable) == s.monoid.size


def test_bfs_cap(monkeypatch):
    monkeypatch.setenv("PREMONOID_MAX_BFS_N", "3")
    with pytest.raises(SizeCapExceeded):
        oracle.quasi_identity_bfs(4)


def test_sweep_counts():
    assert oracle.sweep_howie(3, min_n=3).checked == 21
    assert oracle.sweep_howie(3).checked == 2 + 21
    assert oracle.sweep_transpositions(4, min_n=4).checked == 23
    assert oracle.sweep_transpositions(4).checked == 1 + 5 + 23
    rep = oracle.sweep_cd([2, 3], trials=10, seed=1)
    assert rep.checked == 20 and rep.passed


def test_howie_gap_data():
    # bound minus BFS minimum, maximized over each T_n (recorded, not judged)
    rep = oracle.sweep_howie(5)
    assert rep.passed
    assert rep.notes["max_bound_minus_oracle"] == {2: 0, 3: 2, 4: 3, 5: 4}


def test_characterization_and_height_sweeps():
    for rep in (oracle.sweep_characterizations(4), oracle.sweep_heights(4),
                oracle.sweep_power_monoids(), oracle.sweep_bounded((3,), s=2)):
        assert rep.passed, rep.failures
        assert rep.checked > 0


def test_report_serialization_is_deterministic():
    a = oracle.sweep_transpositions(4)
    b = oracle.sweep_transpositions(4)
    assert a.to_json() == b.to_json()
    assert "wall_time" not in json.loads(a.to_json())
    assert "wall_time" in a.to_dict(include_timing=True)


def test_report_csv_columns():
    rep = oracle.sweep_howie(3, min_n=3)
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert list(rows[0]) == oracle.CSV_COLUMNS
    assert len(rows) == 21
    assert all(r["status"] == "ok" for r in rows)


def test_failures_make_report_fail():
    rep = oracle.SweepReport("x", {})
    assert rep.passed
    rep.fail("e", 1, 2)
    assert not rep.passed
    merged = oracle.SweepReport("all", {})
    merged.merge(rep)
    assert merged.failures == [("e", 1, 2)]


def test_unknown_base_monoid():
    with pytest.raises(ValueError):
        oracle.base_monoid("Z7")
