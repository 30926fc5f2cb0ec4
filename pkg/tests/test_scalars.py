from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from limweight.scalars import Poly, coeff, degree_range, eps, eps_series, inv_eps, normalize, series_coefficients

from conftest import rationals

t, s = Poly.var("t"), Poly.var("s")


def test_eps_times_inverse_collapses_to_one():
    assert normalize(eps * inv_eps) == 1
    assert isinstance(normalize(eps * inv_eps), Fraction)


def test_jet_generators_square_to_zero():
    assert t * t == 0
    assert (1 + t) * (1 - t) == 1
    assert (t + s) * (t + s) == 2 * t * s


def test_division_by_monomial_stays_laurent():
    p = (eps + 3) / eps
    assert p == 1 + 3 * inv_eps


def test_division_by_jet_is_refused():
    with pytest.raises(TypeError):
        eps / t


def test_coefficients_and_degrees():
    p = eps_series({-2: "1/3", 0: 5, 4: -1})
    assert degree_range(p) == (-2, 4)
    assert coeff(p, "eps", -2) == Fraction(1, 3)
    assert series_coefficients(p) == {-2: Fraction(1, 3), 0: 5, 4: -1}
    assert degree_range(Fraction(7)) == (0, 0)


def test_subs_hits_pole():
    with pytest.raises(ZeroDivisionError):
        inv_eps.subs("eps", 0)
    assert (inv_eps + eps).subs("eps", 2) == Fraction(5, 2)


def test_repr_is_readable():
    assert repr(Poly()) == "0"
    assert "eps^-1" in repr(inv_eps)


@given(st.dictionaries(st.integers(-4, 4), rationals, max_size=4))
def test_series_round_trip(d):
    d = {k: v for k, v in d.items() if v}
    assert series_coefficients(eps_series(d)) == d


@given(rationals, rationals, rationals)
def test_ring_laws(a, b, c):
    x = a + b * eps + c * inv_eps
    y = b - a * eps
    z = c * t + a
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert hash(normalize(x - x + 1)) == hash(Fraction(1))
