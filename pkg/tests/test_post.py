from limweight.carriers import Sampler, heis, heis_coords, symbolic_element
from limweight.fixtures import weight_one_fixture
from limweight.lie import MatrixLieAlgebra, ScalarPair
from limweight.matrix import Matrix
from limweight.pairs import conjugation, power_pair
from limweight.post import (TriangleStructure, check_bracket_consistency, check_post_group, check_postlie,
                            check_pregroup, check_prelie, check_star, grossman_star, ordinary_product_triangle,
                            rb_to_postlie, same_table, triangle_from_rrb, triangle_tangent, trivial_triangle)
from limweight.rota_baxter import (GroupRBFixture, LieRBFixture, hb_fixture, heisenberg_b0, identity_operator,
                                   lie_hb_fixture, rb_group_tangent, trivial_operator)

from conftest import I, sym

HB = hb_fixture()
T = triangle_from_rrb(HB)
G = MatrixLieAlgebra(3)


def test_triangle_closed_form():
    a, b = symbolic_element(3, "a"), symbolic_element(3, "b")
    x, y = sym("a"), sym("b")
    assert heis_coords(T.triangle(a, b)) == (y[0], y[1], y[2] + x[1] * y[1])
    assert T.triangle(a, I()) == I()
    assert T.triangle_inverse(a, T.triangle(a, b)) == b


def test_trivial_operator_gives_trivial_triangle():
    f = GroupRBFixture("trivial", G, power_pair(), conjugation, trivial_operator)
    a, b = heis(1, 2, 3), heis(-1, 0, 5)
    assert triangle_from_rrb(f).triangle(a, b) == b


def test_post_group_and_pregroup_symbolic():
    triple = [tuple(symbolic_element(3, p) for p in "abc")]
    assert check_post_group(T, triple).passed
    assert check_pregroup(T, triple).passed


def test_trivial_triangle_is_pregroup():
    triples = Sampler(4).tuples(3, 3, 20)
    assert check_pregroup(trivial_triangle(power_pair(), 3), triples).passed


def test_weight_one_triangle_is_post_but_not_pre():
    f = weight_one_fixture()
    t = triangle_from_rrb(f)
    triples = Sampler(5).tuples(3, 3, 20)
    assert check_post_group(t, triples).passed
    r = check_pregroup(t, triples)
    assert not r.passed and r.witness is not None
    assert check_star(t, f, triples).passed


def test_ordinary_product_in_heisenberg_still_satisfies_the_laws():
    # Ad only sees the class modulo the centre, so the half-bracket terms cancel.
    triples = Sampler(6).tuples(3, 3, 20)
    assert check_post_group(ordinary_product_triangle(T), triples).passed


def test_identity_operator_on_four_by_four_breaks_post_group_laws():
    g4 = MatrixLieAlgebra(4)
    f = GroupRBFixture("id4", g4, power_pair(), conjugation, identity_operator)
    r = check_post_group(triangle_from_rrb(f), Sampler(7).tuples(4, 3, 10))
    assert not r.passed
    assert r.details["first_failure"] == "postgroup-weighted-associative"


def test_one_by_one_pregroup():
    one = Matrix([[1]])
    t = TriangleStructure("point", 1, power_pair(), lambda a, b: b, lambda a, b: b)
    assert check_pregroup(t, [(one, one, one)]).passed


def test_grossman_star():
    a, b = symbolic_element(3, "a"), symbolic_element(3, "b")
    x, y = sym("a"), sym("b")
    assert heis_coords(grossman_star(T, a, b)) == (x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[1] * y[1])
    assert grossman_star(T, I(), b) == b
    assert check_star(T, HB, Sampler(8).tuples(3, 3, 30)).passed


def test_postlie_from_b0():
    d = rb_to_postlie(lie_hb_fixture())
    e12, e23, e13 = G.basis()
    for u in G.basis():
        for v in G.basis():
            expected = e13 if (u, v) == (e23, e23) else (0, 0, 0)
            assert d.tri(u, v) == expected
    r = check_postlie(d)
    assert r.passed and r.details["limit_abelian"]
    assert check_prelie(d).passed


def test_zero_operator_postlie():
    d = rb_to_postlie(LieRBFixture("zero", G, ScalarPair(), G.ad_basis(), Matrix.zero(3)))
    assert all(not any(x) for row in d.table for x in row)
    assert check_postlie(d).passed


def test_tangent_coherence():
    d = triangle_tangent(T, G)
    assert same_table(d, rb_to_postlie(rb_group_tangent(HB)))
    assert check_postlie(d).passed
    assert check_bracket_consistency(d, heisenberg_b0()).passed
    assert not check_bracket_consistency(d, Matrix.identity(3)).passed


def test_trivial_triangle_tangent_vanishes():
    d = triangle_tangent(trivial_triangle(power_pair(), 3), G)
    assert all(not any(x) for row in d.table for x in row)
