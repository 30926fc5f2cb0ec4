"""Limit-weighted Rota-Baxter and differential operators on nilpotent matrix carriers.

Exact rational arithmetic throughout, except for the ODE flows, which use numpy.
"""

from .brace import SkewBrace, YbeMap, brace_solution, check_brace, check_braid, omega, omega_inv, ybe_map
from .carriers import Sampler, heis, heis_coords, sample_tuples, symbolic_element
from .checks import CheckResult
from .exact_core import (LimitDoesNotExist, NotNilpotentError, NotUnipotentError, TangentUndefined, laurent_limit,
                         mat_exp, mat_log, mixed_partial, tangent_map, unipotent_inverse, unipotent_power)
from .fixtures import list_fixtures, load_fixture
from .lie import LieAlgebra, LinearPair, MatrixLieAlgebra, ScalarPair
from .matrix import Matrix
from .novikov import (check_group_rdiff, check_novikov_group, check_novikov_lie, diff_from_novikov,
                      diff_group_tangent, hd_fixture, novikov_group_mul, novikov_group_tangent,
                      novikov_lie_from_derivation)
from .ode import CoefficientPath, PolynomialPath, check_ode_group, check_rbivp, ode_descent_mul, solve_ivp
from .pairs import MapPair, identity_pair, power_pair, transported_mul
from .post import check_post_group, check_pregroup, check_star, grossman_star, triangle_from_rrb, triangle_tangent
from .rota_baxter import (GroupRBFixture, LieRBFixture, check_descent_group, check_group_rrb, check_lie_rrb,
                          descent_mul, hb_fixture, rb_group_tangent)
from .scalars import Poly, eps, inv_eps
from .suites import Report, SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "CheckResult", "CoefficientPath", "GroupRBFixture", "LieAlgebra", "LieRBFixture", "LimitDoesNotExist",
    "LinearPair", "MapPair", "Matrix", "MatrixLieAlgebra", "NotNilpotentError", "NotUnipotentError",
    "PolynomialPath", "Poly", "Report", "Sampler", "ScalarPair", "SkewBrace", "SuiteConfig", "TangentUndefined",
    "YbeMap", "brace_solution", "check_brace", "check_braid", "check_descent_group", "check_group_rdiff",
    "check_group_rrb", "check_lie_rrb", "check_novikov_group", "check_novikov_lie", "check_ode_group",
    "check_post_group", "check_pregroup", "check_rbivp", "check_star", "descent_mul", "diff_from_novikov",
    "diff_group_tangent", "eps", "grossman_star", "hb_fixture", "hd_fixture", "heis", "heis_coords",
    "identity_pair", "inv_eps", "laurent_limit", "list_fixtures", "load_fixture", "mat_exp", "mat_log",
    "mixed_partial", "novikov_group_mul", "novikov_group_tangent", "novikov_lie_from_derivation",
    "ode_descent_mul", "omega", "omega_inv", "power_pair", "rb_group_tangent", "run_suite", "sample_tuples",
    "solve_ivp", "symbolic_element", "tangent_map", "transported_mul", "triangle_from_rrb", "triangle_tangent",
    "unipotent_inverse", "unipotent_power", "ybe_map",
]
