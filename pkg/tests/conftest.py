from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from limweight.carriers import from_coords, upper_positions, symbolic_element
from limweight.exact_core import mat_exp
from limweight.matrix import Matrix
from limweight.scalars import Poly

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def nilpotents(dim):
    n = len(upper_positions(dim))
    return st.tuples(*[rationals] * n).map(lambda v: from_coords(dim, v))


def unipotents(dim):
    return nilpotents(dim).map(mat_exp)


def E(i, j, n=3, value=1):
    return Matrix.unit(n, i, j, value)


def I(n=3):
    return Matrix.identity(n)


def sym(prefix, k=3):
    return tuple(Poly.var(f"{prefix}{i + 1}") for i in range(k))


@pytest.fixture
def sym_abc():
    return tuple(symbolic_element(3, p) for p in "abc")


F = Fraction
