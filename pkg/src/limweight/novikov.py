"""Relative differential operators with limit-weight and Novikov structures."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .checks import CheckResult, all_of, run_law, witness
from .exact_core import laurent_limit, mat_exp, mat_log, mixed_partial
from .lie import LieAlgebra, MatrixLieAlgebra, ScalarPair, act, is_limit_abelian as lie_limit_abelian
from .lie import lim_raise, vadd, vscale, vsub
from .matrix import Matrix
from .pairs import MapPair, conjugation, is_limit_abelian, power_pair, transported_mul, transported_unit
from .rota_baxter import action_tangent, lie_pair_tangent, linear_tangent


@dataclass
class GroupDiffFixture:
    name: str
    algebra: MatrixLieAlgebra
    pair: MapPair
    act: Callable
    operator: Callable
    notes: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.algebra.matrix_dim


@dataclass
class LieDiffFixture:
    name: str
    algebra: LieAlgebra
    pair: object
    action: list
    D: Matrix


@dataclass
class NovikovProduct:
    """Group-level binary operation together with the data it is checked against."""

    name: str
    algebra: MatrixLieAlgebra
    pair: MapPair
    act: Callable
    mul: Callable

    @property
    def dim(self):
        return self.algebra.matrix_dim


@dataclass
class NovikovLieProduct:
    name: str
    algebra: LieAlgebra
    pair: object
    action: list
    table: list

    def mul(self, u, v):
        from .lie import bilinear
        return bilinear(self.table, u, v)


# -- operators ----------------------------------------------------------------


def exp_half_bracket_operator(g, d):
    """exp(u) -> exp(D u + 1/2 [u, D u])."""
    def op(a):
        u = g.coords(mat_log(a))
        du = d.apply(u)
        return mat_exp(g.to_matrix(vadd(du, vscale(Fraction(1, 2), g.bracket(u, du)))))
    return op


def grading_derivation():
    """D0 = diag(1, 1, 2) on (E12, E23, E13)."""
    return Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])


def hd_fixture():
    g = MatrixLieAlgebra(3, "heisenberg")
    return GroupDiffFixture("heisenberg-diff", g, power_pair(), conjugation,
                            exp_half_bracket_operator(g, grading_derivation()),
                            notes={"D": grading_derivation().to_json()})


# -- group level -----------------------------------------------------------------


def check_group_rdiff(f, pairs, anchor="D(ab) = lim H(L D(a) Gamma_a(L D(b)))"):
    p, op = f.pair, f.operator

    def law(a, b):
        rhs = laurent_limit(p.raise_(p.lower(op(a)).matmul(f.act(a, p.lower(op(b))))))
        return op(a.matmul(b)), rhs
    return run_law("group-rdiff", pairs, law, anchor)


def novikov_group_mul(f, a, b):
    """a (.) b = lim H(Gamma_a(L D(b)))."""
    p = f.pair
    return laurent_limit(p.raise_(f.act(a, p.lower(f.operator(b)))))


def novikov_product(f):
    return NovikovProduct(f"novikov({f.name})", f.algebra, f.pair, f.act,
                          lambda a, b: novikov_group_mul(f, a, b))


def check_novikov_group(n, triples, anchor="Novikov group axioms with limit-weight"):
    triples = list(triples)
    p, mul = n.pair, n.mul
    e = transported_unit(p, n.dim)
    tmul = lambda x, y: transported_mul(p, x, y)  # noqa: E731

    def rets(a, b, c):
        lhs = laurent_limit(p.raise_(n.act(a, p.lower(mul(b, c)))))
        return lhs, mul(a.matmul(b), c)

    parts = [
        run_law("novikov-unit", [x[:1] for x in triples], lambda a: (mul(a, e), e), anchor),
        run_law("novikov-product-rule", triples,
                lambda a, b, c: (mul(a, b.matmul(c)), tmul(mul(a, b), mul(a.matmul(b), c))), anchor),
        run_law("novikov-action-compatibility", triples, rets, anchor),
        is_limit_abelian(p, [x[:2] for x in triples]),
    ]
    out = all_of("novikov-group", parts, anchor)
    out.samples = len(triples)
    return out


def diff_from_novikov(n, gate_triples):
    """D(a) = e (.) a, after the Novikov axioms pass on ``gate_triples``."""
    gate = check_novikov_group(n, gate_triples)
    if not gate.passed:
        raise ValueError(f"not a Novikov product: {gate.details.get('first_failure')}")
    e = transported_unit(n.pair, n.dim)
    return GroupDiffFixture(f"diff({n.name})", n.algebra, n.pair, n.act, lambda a: n.mul(e, a))


def check_round_trip(f, triples, anchor="D -> (.) -> D is the identity"):
    """Recover D from its Novikov product and compare on samples."""
    back = diff_from_novikov(novikov_product(f), triples)
    return run_law("novikov-round-trip", [x[:1] for x in triples],
                   lambda a: (back.operator(a), f.operator(a)), anchor)


# -- Lie level -------------------------------------------------------------------


def check_lie_rdiff(f, basis=None, anchor="D[u,v] = lim H(...)"):
    g, p, d = f.algebra, f.pair, f.D
    basis = basis or g.basis()

    def law(u, v):
        du, dv = p.lower(d.apply(u)), p.lower(d.apply(v))
        inner = vadd(vsub(act(f.action, u, dv), act(f.action, v, du)), g.bracket(du, dv))
        return d.apply(g.bracket(u, v)), lim_raise(p, inner)
    return run_law("lie-rdiff", [(u, v) for u in basis for v in basis], law, anchor)


def diff_group_tangent(f):
    g = f.algebra
    return LieDiffFixture(f"tangent({f.name})", g, lie_pair_tangent(f.pair, g),
                          action_tangent(g, f.act), linear_tangent(g, f.operator))


def adjoint_diff_fixture(g, d, name=""):
    return LieDiffFixture(name or f"der({g.name})", g, ScalarPair(), g.ad_basis(), d)


def novikov_lie_from_derivation(f):
    """u o v = lim H(gamma_u(L D v)); requires a limit-abelian pair."""
    g, p = f.algebra, f.pair
    if not lie_limit_abelian(g, p):
        raise ValueError("pair is not limit-abelian on this algebra")
    b = g.basis()
    table = [[lim_raise(p, act(f.action, u, p.lower(f.D.apply(v)))) for v in b] for u in b]
    return NovikovLieProduct(f"novikov-lie({f.name})", g, p, f.action, table)


def check_novikov_lie(n, basis=None, anchor="Novikov Lie axioms with limit-weight"):
    g, p = n.algebra, n.pair
    basis = basis or g.basis()
    m = n.mul
    eff = lambda u, x: lim_raise(p, act(n.action, u, p.lower(x)))  # noqa: E731
    triples = [(u, v, w) for u in basis for v in basis for w in basis]
    parts = [
        run_law("novikov-lie-left", triples,
                lambda u, v, w: (m(u, g.bracket(v, w)), vsub(eff(u, m(v, w)), eff(u, m(w, v)))), anchor),
        run_law("novikov-lie-right", triples,
                lambda u, v, w: (m(g.bracket(u, v), w), vsub(eff(u, m(v, w)), eff(v, m(u, w)))), anchor),
    ]
    if not lie_limit_abelian(g, p):
        parts.append(CheckResult("novikov-lie-limit-abelian", False, anchor))
    return all_of("novikov-lie", parts, anchor)


def novikov_group_tangent(n):
    g = n.algebra
    b = g.basis()
    table = [[g.coords(mixed_partial(n.mul, g.to_matrix(u), g.to_matrix(v))) for v in b] for u in b]
    return NovikovLieProduct(f"tangent({n.name})", g, lie_pair_tangent(n.pair, g),
                             action_tangent(g, n.act), table)


# -- closed-form comparison --------------------------------------------------------


def closed_form_novikov(f, d, coefficient):
    """exp(D v + 1/2 [v, D v] + c [u, D v]) for a = exp u, b = exp v."""
    g = f.algebra

    def mul(a, b):
        u, v = g.coords(mat_log(a)), g.coords(mat_log(b))
        dv = d.apply(v)
        x = vadd(dv, vscale(Fraction(1, 2), g.bracket(v, dv)), vscale(coefficient, g.bracket(u, dv)))
        return mat_exp(g.to_matrix(x))
    return NovikovProduct(f"closed-form[{coefficient}]", g, f.pair, f.act, mul)


def bracket_coefficient_finding(f, d, triples, candidates=(Fraction(1, 2), Fraction(1))):
    """Compare closed forms with coefficient c on [u, D v] against the defining limit.

    Returns a JSON-ready record naming the coefficient that the limit selects, a
    witness where the others disagree, and whether each closed form satisfies the
    Novikov axioms.
    """
    triples = list(triples)
    oracle = novikov_product(f)
    record = {"name": "novikov-bracket-coefficient", "candidates": {}}
    for c in candidates:
        cf = closed_form_novikov(f, d, c)
        agree = run_law("agree", [x[:2] for x in triples], lambda a, b: (cf.mul(a, b), oracle.mul(a, b)))
        axioms = check_novikov_group(cf, triples)
        record["candidates"][str(c)] = {
            "matches_defining_limit": agree.passed,
            "novikov_axioms": axioms.status,
            "first_axiom_failure": axioms.details.get("first_failure"),
            "witness": agree.witness,
        }
    matching = [k for k, v in record["candidates"].items() if v["matches_defining_limit"]]
    record["selected_coefficient"] = matching[0] if len(matching) == 1 else None
    return record


def heis_witness_pair():
    from .carriers import heis
    return heis(1, 0, 0), heis(0, 1, 0)


__all__ = [
    "GroupDiffFixture", "LieDiffFixture", "NovikovLieProduct", "NovikovProduct", "adjoint_diff_fixture",
    "bracket_coefficient_finding", "check_group_rdiff", "check_lie_rdiff", "check_novikov_group",
    "check_novikov_lie", "check_round_trip", "closed_form_novikov", "diff_from_novikov", "diff_group_tangent",
    "exp_half_bracket_operator", "grading_derivation", "hd_fixture", "heis_witness_pair", "novikov_group_mul",
    "novikov_group_tangent", "novikov_lie_from_derivation", "novikov_product", "witness",
]
