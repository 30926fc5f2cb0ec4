import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limweight.fixtures import ode_polynomial_set
from limweight.ode import (FlowBlowUp, FunctionPath, PolynomialPath, ZeroPath, check_determinant_bounds,
                           check_ode_group, check_rbivp, check_step_halving, make_grid, ode_descent_mul,
                           ode_inverse, path_from_json, rbivp_residuals, solve_flows, solve_ivp,
                           step_halving_ratio)

E12 = np.array([[0.0, 1.0], [0.0, 0.0]])
SET = ode_polynomial_set()


def test_constant_nilpotent_flow_is_exact():
    grid = make_grid(0.0, 1.0, 2 ** -4)
    sol = solve_ivp(PolynomialPath([E12]), grid)
    assert np.allclose(sol.values[-1], np.eye(2) + E12, atol=1e-15)


def test_diagonal_flow_matches_exponential():
    u = PolynomialPath([np.diag([1.0, -2.0]), np.diag([2.0, 0.0])])
    sol = solve_ivp(u, make_grid())
    x = sol.grid[-1]
    assert np.allclose(sol.values[-1], np.diag([math.exp(x + x * x), math.exp(-2 * x)]), atol=1e-10)


def test_zero_path_keeps_the_identity():
    sol = solve_ivp(ZeroPath(3), make_grid(0, 1, 0.25))
    assert np.array_equal(sol.values, np.broadcast_to(np.eye(3), (5, 3, 3)))


def test_nilpotent_pair_has_tiny_residual():
    u, v = SET.pairs[0]
    r = check_rbivp(u, v)
    assert r.passed and r.details["max_residual"] < 1e-12


def test_rbivp_on_the_polynomial_set():
    for u, v in SET.pairs:
        r = check_rbivp(u, v, h=2 ** -10, tol=1e-6)
        assert r.passed, (u.name, v.name, r.details)
        assert 0.0 <= r.details["worst_x"] <= 1.0


def test_residual_grid_shape():
    u, v = SET.pairs[2]
    grid, res = rbivp_residuals(u, v, h=2 ** -6)
    assert grid.shape == res.shape == (65,)
    assert res[0] == 0.0


def test_step_halving_is_fourth_order():
    for u, v in SET.pairs[2:]:
        r1, r2, q = step_halving_ratio(u, v)
        assert r2 < r1 and q >= 12
    assert check_step_halving(SET.pairs[2:]).passed


def test_descent_group():
    r = check_ode_group(SET.triples)
    assert r.passed, r.details


def test_inverse_undoes_descent_product():
    u = SET.pairs[2][0]
    grid = make_grid(0, 1, 2 ** -8)
    w = ode_descent_mul(u, ode_inverse(u))
    sol = solve_flows([w], grid)
    assert np.abs(sol[w].values - np.eye(2)).max() < 1e-9


def test_blow_up_is_reported():
    shrink = PolynomialPath([-20.0 * np.eye(2)], "shrink")
    with pytest.raises(FlowBlowUp, match="blow-up"):
        solve_ivp(shrink, make_grid())
    assert not check_rbivp(shrink, ZeroPath(2)).passed


def test_function_path():
    u = FunctionPath(lambda x: np.array([[0.0, math.cos(x)], [0.0, 0.0]]), 2, "cos")
    sol = solve_ivp(u, make_grid())
    assert abs(sol.values[-1][0, 1] - math.sin(1.0)) < 1e-12


def test_determinant_bounds():
    assert check_determinant_bounds([p for pair in SET.pairs for p in pair]).passed


def test_make_grid_rejects_bad_steps():
    with pytest.raises(ValueError):
        make_grid(0.0, 1.0, 0.3)
    with pytest.raises(ValueError):
        solve_flows([ZeroPath(2)], np.array([0.0, 0.0, 1.0]))


def test_path_from_json():
    p = path_from_json({"name": "p", "coefficients": [[[0, 1], [0, 0]], [["1/2", 0], [0, 0]]]})
    assert p.name == "p" and p.degree() == 1
    assert np.allclose(p(2.0), [[1.0, 1.0], [0.0, 0.0]])
    assert path_from_json([[[1]]]).degree() == 0


@settings(max_examples=10)
@given(st.integers(0, 2 ** 31))
def test_random_pairs_satisfy_rbivp(seed):
    from limweight.ode import random_polynomial_path
    rng = np.random.default_rng(seed)
    u, v = (random_polynomial_path(rng, 2, 2) for _ in range(2))
    assert check_rbivp(u, v, h=2 ** -8, tol=1e-6).passed
