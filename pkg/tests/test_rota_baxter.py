from fractions import Fraction

from limweight.carriers import Sampler, heis, heis_coords, symbolic_element
from limweight.exact_core import unipotent_inverse
from limweight.fixtures import weight_one_fixture
from limweight.lie import MatrixLieAlgebra, ScalarPair, heisenberg
from limweight.matrix import Matrix
from limweight.pairs import conjugation, identity_pair, power_pair
from limweight.rota_baxter import (GroupRBFixture, LieRBFixture, check_descent_group, check_group_rrb,
                                   check_lie_rrb, descent_inverse, descent_mul, hb_fixture, heisenberg_b0,
                                   identity_operator, inverse_operator, lie_hb_fixture, rb_group_tangent,
                                   search_weight_zero_operators, trivial_operator)

from conftest import I, sym

HB = hb_fixture()


def test_hb_operator_closed_form():
    assert HB.operator(heis(5, 7, 11)) == heis(7, 0, 0)


def test_descent_examples():
    assert descent_mul(HB, heis(0, 1, 0), heis(0, 1, 0)) == heis(0, 2, 1)
    a = heis(1, -2, Fraction(1, 3))
    assert descent_mul(HB, a, I()) == a
    assert descent_mul(HB, a, descent_inverse(HB, a)) == I()


def test_descent_symbolic():
    a, b = symbolic_element(3, "a"), symbolic_element(3, "b")
    x, y = sym("a"), sym("b")
    assert heis_coords(descent_mul(HB, a, b)) == (x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[1] * y[1])


def test_identity_pair_descent_formula():
    g = MatrixLieAlgebra(3)
    f = GroupRBFixture("id", g, identity_pair(), conjugation, identity_operator)
    a, b = Sampler(1).unipotent(3), Sampler(2).unipotent(3)
    assert descent_mul(f, a, b) == a.matmul(a).matmul(b).matmul(unipotent_inverse(a))


def test_group_rrb_fixtures():
    triples = Sampler(3).tuples(3, 3, 30)
    pairs = [t[:2] for t in triples]
    assert check_group_rrb(HB, pairs).passed
    assert check_descent_group(HB, triples).passed
    w1 = weight_one_fixture()
    assert check_group_rrb(w1, pairs).passed
    assert check_descent_group(w1, triples).passed
    g = MatrixLieAlgebra(3)
    for op in (trivial_operator, inverse_operator):
        f = GroupRBFixture("x", g, identity_pair(), conjugation, op)
        assert check_descent_group(f, triples[:10]).passed
    f = GroupRBFixture("trivial-power", g, power_pair(), conjugation, trivial_operator)
    assert check_group_rrb(f, pairs[:10]).passed


def test_identity_operator_is_not_rrb():
    g = MatrixLieAlgebra(3)
    f = GroupRBFixture("id", g, identity_pair(), conjugation, identity_operator)
    r = check_group_rrb(f, [(heis(1, 0, 0), heis(0, 1, 0))])
    assert not r.passed and r.witness is not None


def test_one_by_one_carrier():
    g = MatrixLieAlgebra(1)
    f = GroupRBFixture("point", g, power_pair(), conjugation, identity_operator)
    one = Matrix([[1]])
    assert check_descent_group(f, [(one, one, one)]).passed


def test_lie_rrb_examples():
    assert check_lie_rrb(lie_hb_fixture()).passed
    g = MatrixLieAlgebra(3)
    zero = LieRBFixture("zero", g, ScalarPair(), g.ad_basis(), Matrix.zero(3))
    assert check_lie_rrb(zero).passed
    ident = LieRBFixture("id", g, ScalarPair(), g.ad_basis(), Matrix.identity(3))
    r = check_lie_rrb(ident)
    assert not r.passed
    assert r.witness["inputs"] == [["1", "0", "0"], ["0", "1", "0"]]
    assert r.witness["lhs"] == ["0", "0", "1"] and r.witness["rhs"] == ["0", "0", "2"]


def test_group_tangent_recovers_b0():
    t = rb_group_tangent(HB)
    assert t.B == heisenberg_b0()
    assert t.pair == ScalarPair()
    assert check_lie_rrb(t).passed
    assert t.action == MatrixLieAlgebra(3).ad_basis()


def test_weight_one_tangent():
    t = rb_group_tangent(weight_one_fixture())
    assert t.pair == ScalarPair(1, 1)
    assert check_lie_rrb(t).passed


def test_brute_force_search_finds_b0():
    found = search_weight_zero_operators(heisenberg())
    assert heisenberg_b0() in found
    assert Matrix.zero(3) in found
    assert len(found) == 639
