"""Relative Rota-Baxter operators with limit-weight, descent groups, and tangents."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .checks import CheckResult, all_of, run_law
from .exact_core import laurent_limit, mat_exp, mat_log, mixed_partial, tangent_map, unipotent_inverse
from .lie import (LieAlgebra, LinearPair, MatrixLieAlgebra, ScalarPair, act, lim_raise, vadd, vsub)
from .matrix import Matrix
from .pairs import MapPair, conjugation, transported_unit


@dataclass
class GroupRBFixture:
    name: str
    algebra: MatrixLieAlgebra
    pair: MapPair
    act: Callable
    operator: Callable
    weight_zero: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.algebra.matrix_dim


@dataclass
class LieRBFixture:
    name: str
    algebra: LieAlgebra
    pair: object  # ScalarPair or LinearPair
    action: list  # generator matrices gamma_{e_i}
    B: Matrix


# -- operators --------------------------------------------------------------


def exp_linear_operator(g, b):
    """exp(u) -> exp(B u + 1/2 B[u, B u]), the operator induced by a linear map B."""
    def op(a):
        u = g.coords(mat_log(a))
        bu = b.apply(u)
        v = vadd(bu, b.apply(tuple(x / 2 for x in g.bracket(u, bu))))
        return mat_exp(g.to_matrix(v))
    return op


def trivial_operator(a):
    return Matrix.identity(a.dim)


def identity_operator(a):
    return a


def inverse_operator(a):
    return unipotent_inverse(a)


def heisenberg_factorization_operator(a):
    """a = h k with h in exp(span(E12, E13)) and k = exp(b E23); returns k^-1."""
    return Matrix.identity(3) + Matrix.unit(3, 2, 3, -a[1, 2])


# -- group level --------------------------------------------------------------


def descent_mul(f, a, b):
    """a * b = lim raise(lower(a) Gamma_{B(a)}(lower(b)))."""
    p = f.pair
    return laurent_limit(p.raise_(p.lower(a).matmul(f.act(f.operator(a), p.lower(b)))))


def descent_unit(f):
    return transported_unit(f.pair, f.dim)


def descent_inverse(f, a):
    """lim raise(Gamma_{B(a)^-1}(lower(a)^-1))."""
    p = f.pair
    return laurent_limit(p.raise_(f.act(unipotent_inverse(f.operator(a)), unipotent_inverse(p.lower(a)))))


def check_group_rrb(f, pairs, anchor="B(a)B(b) = B(a * b)"):
    op = f.operator
    return run_law("group-rrb", pairs,
                   lambda a, b: (op(a).matmul(op(b)), op(descent_mul(f, a, b))), anchor)


def check_weight_zero_flag(f, samples, anchor="lim lower(a) = e for weight zero"):
    if not f.weight_zero:
        return CheckResult("weight-zero-flag", True, anchor, details={"skipped": True})
    e = Matrix.identity(f.dim)
    return run_law("weight-zero-flag", ((a,) for a in samples),
                   lambda a: (laurent_limit(f.pair.lower(a)), e), anchor)


def check_descent_group(f, triples, anchor="descent group law"):
    triples = list(triples)
    mul = lambda x, y: descent_mul(f, x, y)  # noqa: E731
    e = descent_unit(f)
    firsts = [t[:1] for t in triples]
    parts = [
        run_law("descent-associativity", triples,
                lambda a, b, c: (mul(mul(a, b), c), mul(a, mul(b, c))), anchor),
        run_law("descent-unit", firsts, lambda a: ((mul(a, e), mul(e, a)), (a, a)), anchor),
        run_law("descent-inverse", firsts,
                lambda a: ((mul(a, descent_inverse(f, a)), mul(descent_inverse(f, a), a)), (e, e)), anchor),
        run_law("descent-homomorphism", [t[:2] for t in triples],
                lambda a, b: (f.operator(mul(a, b)), f.operator(a).matmul(f.operator(b))), anchor),
    ]
    out = all_of("descent-group", parts, anchor)
    out.samples = len(triples)
    return out


# -- Lie level ----------------------------------------------------------------


def check_action_derivations(g, action, anchor="gamma_u is a derivation"):
    for i, gi in enumerate(action):
        if not g.is_derivation(gi):
            return CheckResult("action-derivations", False, anchor, witness={"generator": i, "map": gi.to_json()})
    return CheckResult("action-derivations", True, anchor, samples=len(action))


def lie_rrb_sides(f, u, v):
    g, p, b = f.algebra, f.pair, f.B
    bu, bv = b.apply(u), b.apply(v)
    lu, lv = p.lower(u), p.lower(v)
    inner = vadd(vsub(act(f.action, bu, lv), act(f.action, bv, lu)), g.bracket(lu, lv))
    return g.bracket(bu, bv), b.apply(lim_raise(p, inner))


def check_lie_rrb(f, basis=None, anchor="[Bu,Bv] = B(lim H(...))"):
    basis = basis or f.algebra.basis()
    pairs = [(u, v) for u in basis for v in basis]
    main = run_law("lie-rrb", pairs, lambda u, v: lie_rrb_sides(f, u, v), anchor)
    return all_of("lie-rrb", [check_action_derivations(f.algebra, f.action), main], anchor)


def lie_pair_tangent(pair, g):
    """Tangent maps of a group pair at the identity, as a Lie-level pair."""
    def tangent_matrix(fn):
        cols = [g.coords(tangent_map(fn, g.to_matrix(e))) for e in g.basis()]
        return Matrix([[cols[j][i] for j in range(g.dim)] for i in range(g.dim)])
    lin = LinearPair(tangent_matrix(pair.lower), tangent_matrix(pair.raise_))
    return lin.as_scalar() or lin


def linear_tangent(g, op):
    """First-order jet of a group map at the identity, as a matrix on coordinates."""
    cols = [g.coords(tangent_map(op, g.to_matrix(e))) for e in g.basis()]
    return Matrix([[cols[j][i] for j in range(g.dim)] for i in range(g.dim)])


def action_tangent(g, act_fn):
    """gamma_{e_i} from the mixed partial of (x, y) -> act_x(y)."""
    gens = []
    for e in g.basis():
        cols = [g.coords(mixed_partial(act_fn, g.to_matrix(e), g.to_matrix(e2))) for e2 in g.basis()]
        gens.append(Matrix([[cols[j][i] for j in range(g.dim)] for i in range(g.dim)]))
    return gens


def rb_group_tangent(f):
    g = f.algebra
    return LieRBFixture(f"tangent({f.name})", g, lie_pair_tangent(f.pair, g),
                        action_tangent(g, f.act), linear_tangent(g, f.operator))


# -- brute-force operator search ------------------------------------------------


def search_weight_zero_operators(g, values=(-1, 0, 1), derived_invariant=True):
    """All linear maps with entries in ``values`` that are weight-zero RB operators
    for the adjoint action, optionally mapping [g, g] into itself.

    Vectorized over every candidate at once; returned as exact matrices.
    """
    n = g.dim
    consts = np.array([[[float(x) for x in c] for c in row] for row in g.consts])
    grid = np.array(np.meshgrid(*([values] * (n * n)), indexing="ij")).reshape(n * n, -1).T
    bs = grid.reshape(-1, n, n).astype(float)  # bs[:, k, j]: k-th coordinate of B e_j
    ok = np.ones(len(bs), dtype=bool)
    for i in range(n):
        for j in range(n):
            bu, bv = bs[:, :, i], bs[:, :, j]
            lhs = np.einsum("na,nb,abk->nk", bu, bv, consts)
            inner = np.einsum("na,ak->nk", bu, consts[:, j, :]) + np.einsum("nb,bk->nk", bv, consts[i, :, :])
            rhs = np.einsum("nkm,nm->nk", bs, inner)
            ok &= np.all(np.abs(lhs - rhs) < 1e-9, axis=1)
    if derived_invariant:
        derived = np.zeros((n, n * n))
        for i in range(n):
            for j in range(n):
                derived[:, i * n + j] = consts[i, j]
        rank = np.linalg.matrix_rank(derived)
        # B maps every bracket into the span of the brackets
        for i in range(n):
            for j in range(n):
                img = np.einsum("nkm,m->nk", bs, consts[i, j])
                for idx in np.nonzero(ok)[0]:
                    if np.linalg.matrix_rank(np.column_stack([derived, img[idx]])) > rank:
                        ok[idx] = False
    found = []
    for m in bs[ok]:
        found.append(Matrix([[Fraction(int(x)) for x in row] for row in m]))
    return found


def heisenberg_b0():
    """B0(E23) = E12, zero on E12 and E13."""
    return Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def hb_fixture(g=None):
    from .pairs import power_pair
    g = g or MatrixLieAlgebra(3, "heisenberg")
    return GroupRBFixture("heisenberg-rb", g, power_pair(), conjugation,
                          exp_linear_operator(g, heisenberg_b0()), weight_zero=True,
                          notes={"B": heisenberg_b0().to_json()})


def lie_hb_fixture():
    g = MatrixLieAlgebra(3, "heisenberg")
    return LieRBFixture("heisenberg-rb-lie", g, ScalarPair(), g.ad_basis(), heisenberg_b0())
