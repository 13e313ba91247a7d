import json
from fractions import Fraction

import pytest

import alg2


def test_algebras():
    m2 = alg2.matrix_algebra(2)
    assert m2.dim == 4
    assert m2.is_semisimple()
    assert m2.simple_dims() == [2]
    assert alg2.product(m2, alg2.ground_field()).simple_dims() == [2, 1]
    assert not alg2.truncated_polynomial(2).is_semisimple()


def test_morita_detection():
    for n in (2, 3):
        rows = alg2.simple_module(alg2.matrix_algebra(n), 0)
        assert alg2.is_equivalence(rows)
        assert alg2.rep_1(rows) == [[1]]
    q = alg2.ground_field()
    proj = alg2.simple_module(alg2.product(q, q), 0)
    assert not alg2.is_equivalence(proj)


def test_zeta_equality_is_exact():
    for a in (alg2.ground_field(), alg2.matrix_algebra(2), alg2.group_algebra_z2(1)):
        lhs, rhs = alg2.zeta_compatibility(a)
        assert alg2.to_fractions(lhs) == alg2.to_fractions(rhs)
    lhs, _ = alg2.zeta_compatibility(alg2.ground_field())
    assert alg2.to_fractions(lhs) == [[Fraction(1)]]


def test_rep_sides_agree():
    v = alg2.simple_module(alg2.matrix_algebra(2), 0)
    lhs, rhs = alg2.rep_theorem_sides(v)
    assert lhs == rhs


def test_not_semisimple_raises():
    with pytest.raises(alg2.NotSemisimple):
        alg2.double_dual_iso(alg2.regular(alg2.truncated_polynomial(2)))


def test_zigzag_and_pentagon():
    assert alg2.zigzag_ok(alg2.truncated_polynomial(2))
    r = alg2.regular(alg2.matrix_algebra(2))
    assert alg2.pentagon_holds(r, r, r, r)


def test_verify_report():
    spec = json.dumps({"bimodules": {"count": 3, "max_dim": 4, "max_mult": 1, "seed": 1}})
    corpus = alg2.generate_corpus_json(spec)
    a = alg2.run("dualobjects", corpus, seed=3)
    b = alg2.run("dualobjects", corpus, seed=3, jobs=2)
    assert a["failures"] == 0
    assert a["digest"] == b["digest"]
    bad = alg2.run("dualobjects", corpus, seed=3, mutate="zigzag_iso")
    assert bad["failures"] > 0
    with pytest.raises(alg2.UsageError):
        alg2.verify("nonsense", corpus)
