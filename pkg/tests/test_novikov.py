import random
from fractions import Fraction

import pytest

from limweight.carriers import Sampler, heis, heis_coords, symbolic_element
from limweight.lie import MatrixLieAlgebra, ScalarPair, solvable2
from limweight.matrix import Matrix
from limweight.novikov import (GroupDiffFixture, NovikovProduct, adjoint_diff_fixture,
                               bracket_coefficient_finding, check_group_rdiff, check_lie_rdiff,
                               check_novikov_group, check_novikov_lie, check_round_trip, closed_form_novikov,
                               diff_from_novikov, diff_group_tangent, grading_derivation, hd_fixture,
                               heis_witness_pair, novikov_group_mul, novikov_group_tangent,
                               novikov_lie_from_derivation, novikov_product)
from limweight.pairs import conjugation, identity_pair
from limweight.rota_baxter import identity_operator
from limweight.suites import random_derivation_fixtures

from conftest import I, sym

HD = hd_fixture()
D0 = grading_derivation()
G = MatrixLieAlgebra(3)


def test_operator_and_unit():
    assert HD.operator(I()) == I()
    assert HD.operator(heis(1, 0, 0)) == heis(1, 0, 0)
    assert HD.operator(heis(0, 0, 1)) == heis(0, 0, 2)


def test_novikov_product_closed_form():
    a, b = symbolic_element(3, "a"), symbolic_element(3, "b")
    x, y = sym("a"), sym("b")
    assert heis_coords(novikov_group_mul(HD, a, b)) == (y[0], y[1], 2 * y[2] + x[0] * y[1] - x[1] * y[0])
    assert novikov_group_mul(HD, a, I()) == I()
    assert novikov_group_mul(HD, I(), b) == HD.operator(b)


def test_group_axioms_symbolic():
    triple = [tuple(symbolic_element(3, p) for p in "abc")]
    assert check_group_rdiff(HD, [t[:2] for t in triple]).passed
    assert check_novikov_group(novikov_product(HD), triple).passed
    assert check_round_trip(HD, triple).passed


def test_group_axioms_sampled():
    triples = Sampler(21).tuples(3, 3, 20)
    assert check_novikov_group(novikov_product(HD), triples).passed
    assert check_round_trip(HD, triples).passed
    back = diff_from_novikov(novikov_product(HD), triples)
    assert check_group_rdiff(back, [t[:2] for t in triples]).passed


def test_projection_product_is_rejected_by_the_gate():
    proj = NovikovProduct("projection", G, HD.pair, conjugation, lambda a, b: b)
    with pytest.raises(ValueError, match="not a Novikov product"):
        diff_from_novikov(proj, Sampler(22).tuples(3, 3, 5))


def test_one_by_one_round_trip():
    g1 = MatrixLieAlgebra(1)
    f = GroupDiffFixture("point", g1, HD.pair, conjugation, identity_operator)
    one = Matrix([[1]])
    back = diff_from_novikov(novikov_product(f), [(one, one, one)])
    assert back.operator(one) == one


def test_identity_operator_with_identity_pair_fails():
    f = GroupDiffFixture("id", G, identity_pair(), conjugation, identity_operator)
    r = check_group_rdiff(f, [(heis(1, 0, 0), heis(0, 1, 0))])
    assert not r.passed and r.witness is not None


def test_lie_level_d0():
    f = adjoint_diff_fixture(G, D0)
    assert check_lie_rdiff(f).passed
    n = novikov_lie_from_derivation(f)
    e12, e23, e13 = G.basis()
    assert n.mul(e12, e23) == e13
    assert n.mul(e13, e13) == (0, 0, 0)
    assert check_novikov_lie(n).passed


def test_solvable_algebra_with_inner_derivation():
    g = solvable2()
    x, y = g.basis()
    f = adjoint_diff_fixture(g, g.ad(y))
    assert check_lie_rdiff(f).passed
    n = novikov_lie_from_derivation(f)
    assert n.mul(y, x) == x
    assert check_novikov_lie(n).passed


def test_swap_is_a_derivation_but_corner_projection_is_not():
    # swapping e12 and e23 only flips the sign of the bracket, which it kills anyway
    assert check_lie_rdiff(adjoint_diff_fixture(G, Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]]))).passed
    bad = check_lie_rdiff(adjoint_diff_fixture(G, Matrix.unit(3, 3, 3)))
    assert not bad.passed and bad.witness is not None


def test_identity_pair_is_rejected_for_lie_products():
    f = adjoint_diff_fixture(G, D0)
    f.pair = ScalarPair(Fraction(1), Fraction(1))
    with pytest.raises(ValueError, match="limit-abelian"):
        novikov_lie_from_derivation(f)


def test_tangents():
    td = diff_group_tangent(HD)
    assert td.D == D0
    assert check_lie_rdiff(td).passed
    nt = novikov_group_tangent(novikov_product(HD))
    assert nt.table == novikov_lie_from_derivation(td).table
    for u in G.basis():
        for v in G.basis():
            assert nt.mul(u, v) == G.bracket(u, D0.apply(v))
    assert check_novikov_lie(nt).passed


def test_random_derivation_fixtures():
    for f in random_derivation_fixtures(seed=3, count=10):
        assert check_lie_rdiff(f).passed, f.name
        assert check_novikov_lie(novikov_lie_from_derivation(f)).passed, f.name


def test_coefficient_finding():
    a, b = heis_witness_pair()
    triples = [(a, b, heis(0, 0, 1))] + Sampler(23).tuples(3, 3, 5)
    record = bracket_coefficient_finding(HD, D0, triples)
    assert record["selected_coefficient"] == "1"
    half = record["candidates"]["1/2"]
    assert half["matches_defining_limit"] is False
    assert half["novikov_axioms"] == "fail"
    assert record["candidates"]["1"]["novikov_axioms"] == "pass"
    # the witness pair separates the two closed forms in the corner entry
    assert closed_form_novikov(HD, D0, Fraction(1, 2)).mul(a, b) == heis(0, 1, Fraction(1, 2))
    assert closed_form_novikov(HD, D0, 1).mul(a, b) == heis(0, 1, 1)
    assert novikov_group_mul(HD, a, b) == heis(0, 1, 1)


def test_random_derivation_fixture_seed_is_deterministic():
    f1 = random_derivation_fixtures(seed=9, count=3)
    f2 = random_derivation_fixtures(seed=9, count=3)
    assert [f.D for f in f1] == [f.D for f in f2]
    assert random.Random(9).random() == random.Random(9).random()


def test_constant_product_is_accepted_as_the_product_of_the_trivial_operator():
    const = NovikovProduct("constant", G, HD.pair, conjugation, lambda a, b: I())
    back = diff_from_novikov(const, Sampler(24).tuples(3, 3, 5))
    assert back.operator(heis(1, 2, 3)) == I()
