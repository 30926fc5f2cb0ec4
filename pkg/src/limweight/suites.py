"""Verification suites and the deterministic reports they produce."""

import json
import random
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import fixtures as fx
from .brace import (SkewBrace, check_brace, check_braid, check_solution_agreement, corrupted_solution,
                    flip_solution, ybe_map)
from .carriers import heis, sample_tuples
from .checks import CheckResult, all_of, run_law
from .exact_core import mat_exp
from .kernel import kernel_checks
from .lie import (MatrixLieAlgebra, ScalarPair, heisenberg, random_derivation, random_lie_algebra, solvable2)
from .matrix import Matrix
from .novikov import (GroupDiffFixture, LieDiffFixture, NovikovProduct, adjoint_diff_fixture,
                      bracket_coefficient_finding, check_group_rdiff, check_lie_rdiff, check_novikov_group,
                      check_novikov_lie, check_round_trip, diff_from_novikov, diff_group_tangent,
                      novikov_group_tangent, novikov_lie_from_derivation, novikov_product)
from .ode import (DescentPath, check_determinant_bounds, check_ode_group, check_rbivp, check_step_halving,
                  make_grid, rbivp_residuals, solve_flows)
from .pairs import (check_exp_log_sum, check_pair_identity, check_synchronized, check_transported_action,
                    check_transported_semigroup, conjugation, identity_pair, is_limit_abelian, power_pair,
                    squaring_pair, transported_mul)
from .post import (check_bracket_consistency, check_post_group, check_postlie, check_pregroup, check_prelie,
                   check_star, rb_to_postlie, same_table, triangle_from_rrb, triangle_tangent)
from .rota_baxter import (GroupRBFixture, LieRBFixture, check_descent_group, check_group_rrb, check_lie_rrb,
                          check_weight_zero_flag, heisenberg_b0, identity_operator, rb_group_tangent,
                          search_weight_zero_operators)
from .scalars import eps

DEFAULT_TOLERANCES = {"rbivp": 1e-6, "ode-group": 1e-6, "step-halving-factor": 12.0,
                      "h": 2.0 ** -10, "h-coarse": 2.0 ** -4}


class UsageError(ValueError):
    """Unknown suite or fixture, or a fixture of the wrong kind."""


@dataclass
class SuiteConfig:
    suite: str
    samples: int = 100
    seed: int = 0
    mode: str = "random"
    tolerances: dict = field(default_factory=dict)
    fixture: str | None = None
    lie_fixtures: int = 50

    def tol(self, name):
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    def echo(self):
        out = asdict(self)
        out["tolerances"] = {k: self.tol(k) for k in sorted(DEFAULT_TOLERANCES)}
        if self.mode == "symbolic":
            # symbolic mode ignores samples and seed
            out.pop("samples")
            out.pop("seed")
        return out


@dataclass
class Report:
    suite: str
    fixture: str
    config: dict
    checks: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c["status"] == "pass" for c in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def counts(self):
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self.checks:
            out[c["status"]] += 1
        return out

    def to_dict(self, timing=True):
        out = {"suite": self.suite, "fixture": self.fixture, "config": self.config, "checks": self.checks,
               "findings": self.findings, "summary": dict(self.counts(), passed=self.passed)}
        if timing:
            out["timing"] = self.timing
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"


class _Run:
    """Collects results for one suite invocation."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.checks = []
        self.findings = []
        self.timing = {}
        self.csv_rows = []

    def add(self, result, prefix=""):
        entry = result.to_json()
        if prefix:
            entry["name"] = f"{prefix}/{entry['name']}"
        if entry["status"] != "pass" and "witness" not in entry:
            entry["witness"] = {"error": result.error} if result.error else {"details": entry.get("details")}
        self.checks.append(entry)
        return result

    def timed(self, label, fn):
        t0 = time.perf_counter()
        out = fn()
        self.timing[label] = round(time.perf_counter() - t0, 4)
        return out

    def tuples(self, dim, arity):
        cfg = self.cfg
        if cfg.mode == "symbolic" and dim > 4:
            raise UsageError("symbolic mode is limited to dim <= 4")
        return sample_tuples(dim, arity, cfg.samples, cfg.seed, cfg.mode)

    def control_tuples(self, dim, arity, count=10):
        """Small random sample for negative controls, independent of the mode."""
        return sample_tuples(dim, arity, count, self.cfg.seed + 1, "random")


def expect_failure(result, name, anchor=""):
    """A negative control passes when the wrapped check fails with a witness."""
    ok = (not result.passed) and (result.witness is not None or result.error is not None)
    wit = result.witness if result.witness is not None else ({"error": result.error} if result.error else None)
    return CheckResult(name, ok, anchor or result.anchor, witness=wit,
                       details={"expected": "fail", "observed": result.status, "check": result.name},
                       samples=result.samples)


def expect_raise(fn, exc_type, name, anchor=""):
    try:
        fn()
    except exc_type as exc:
        return CheckResult(name, True, anchor, witness={"raised": str(exc)}, details={"expected": "rejection"})
    return CheckResult(name, False, anchor, witness={"raised": None}, details={"expected": "rejection"})


def equality_check(name, lhs, rhs, anchor=""):
    ok = lhs == rhs
    wit = None if ok else {"lhs": _show(lhs), "rhs": _show(rhs)}
    return CheckResult(name, ok, anchor, witness=wit, samples=1)


def _show(x):
    if isinstance(x, Matrix):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    return str(x)


# -- fixture resolution ----------------------------------------------------------


def _resolve(cfg, kinds, defaults):
    if cfg.fixture is None:
        return [fx.load_fixture(d) for d in defaults]
    try:
        f = fx.load_fixture(cfg.fixture)
    except fx.FixtureError as exc:
        raise UsageError(str(exc)) from exc
    if fx.fixture_kind(f) not in kinds:
        raise UsageError(f"suite {cfg.suite!r} needs a fixture of kind {sorted(kinds)}, "
                         f"got {fx.fixture_kind(f)!r}")
    return [f]


def _notes_matrix(f, key):
    m = f.notes.get(key) if hasattr(f, "notes") else None
    return Matrix.from_json(m) if isinstance(m, dict) else None


# -- suites ----------------------------------------------------------------------


def suite_exact_kernel(run):
    cfg = run.cfg
    samples = max(cfg.samples, 1)
    for r in run.timed("exact-kernel", lambda: kernel_checks((3, 4), samples, cfg.seed, cfg.mode == "symbolic")):
        run.add(r)


def suite_transported(run):
    p = power_pair()
    for dim in (3, 4):
        pairs = [t[:2] for t in run.tuples(dim, 2)]
        triples = run.tuples(dim, 3)
        for r in (check_exp_log_sum(p, pairs), check_transported_semigroup(p, triples),
                  is_limit_abelian(p, pairs), check_transported_action(p, triples)):
            r.name = f"{r.name}[dim={dim}]"
            run.add(r, "power")
    fam = [(mat_exp(Matrix.unit(3, 1, 2, 1 + eps)), heis(0, 1, 0))]
    run.add(check_synchronized(p, fam), "power")
    run.add(equality_check("heisenberg-example", transported_mul(p, heis(1, 0, 0), heis(0, 1, 0)), heis(1, 1, 0),
                           "<1,0,0> .oo <0,1,0> = <1,1,0>"), "power")
    ident = identity_pair()
    triples = run.tuples(3, 3)
    run.add(check_pair_identity(ident, [t[0] for t in triples]), "identity")
    run.add(check_transported_semigroup(ident, triples), "identity")
    run.add(expect_failure(is_limit_abelian(ident, [(heis(1, 0, 0), heis(0, 1, 0))]),
                           "identity-pair-not-limit-abelian"), "identity")
    run.add(expect_failure(check_pair_identity(squaring_pair(), [t[0] for t in run.control_tuples(3, 1)]),
                           "squaring-pair-rejected"), "squaring")


def suite_descent(run):
    cfg = run.cfg
    fixtures = _resolve(cfg, {"group-rb"}, ["heisenberg-rb", "identity-pair-weight-one"])
    for f in fixtures:
        triples = run.tuples(f.dim, 3)
        pairs = [t[:2] for t in triples]
        run.add(run.timed(f"{f.name}/group-rrb", lambda: check_group_rrb(f, pairs)), f.name)
        run.add(run.timed(f"{f.name}/descent-group", lambda: check_descent_group(f, triples)), f.name)
        run.add(check_weight_zero_flag(f, [t[0] for t in triples]), f.name)
    if cfg.fixture is None:
        hb = fixtures[0]
        e = Matrix.identity(3)
        run.add(equality_check("descent-example", _descent(hb, heis(0, 1, 0), heis(0, 1, 0)), heis(0, 2, 1),
                               "<0,1,0> * <0,1,0> = <0,2,1>"), hb.name)
        found = search_weight_zero_operators(heisenberg())
        run.add(CheckResult("b0-search", heisenberg_b0() in found, "B0 re-derived by brute-force search",
                            details={"operators_found": len(found)}, samples=3 ** 9), hb.name)
        g = MatrixLieAlgebra(3, "heisenberg")
        bad = GroupRBFixture("identity-operator", g, identity_pair(), conjugation, identity_operator)
        run.add(expect_failure(check_group_rrb(bad, [(heis(1, 0, 0), heis(0, 1, 0))]),
                               "identity-operator-identity-pair-rejected"), "controls")
        run.add(equality_check("unit", _descent(hb, heis(1, 2, 3), e), heis(1, 2, 3), "a * I = a"), hb.name)


def _descent(f, a, b):
    from .rota_baxter import descent_mul
    return descent_mul(f, a, b)


def suite_pregroup(run):
    cfg = run.cfg
    fixtures = _resolve(cfg, {"group-rb"}, ["heisenberg-rb", "identity-pair-weight-one"])
    for f in fixtures:
        t = triangle_from_rrb(f)
        triples = run.tuples(f.dim, 3)
        pairs = [x[:2] for x in triples]
        abelian = is_limit_abelian(f.pair, pairs)
        if abelian.passed:
            run.add(run.timed(f"{f.name}/pre-group", lambda: check_pregroup(t, triples)), f.name)
        else:
            run.add(run.timed(f"{f.name}/post-group", lambda: check_post_group(t, triples)), f.name)
            run.add(expect_failure(check_pregroup(t, triples), "pre-group-rejected"), f.name)
        run.add(run.timed(f"{f.name}/star", lambda: check_star(t, f, triples)), f.name)
        commutes = run_law("triangle-commutes", pairs, lambda a, b: (t.triangle(a, b), t.triangle(b, a)))
        run.findings.append({"name": "triangle-commutativity", "fixture": f.name, "commutative": commutes.passed,
                             "witness": commutes.witness})
    if cfg.fixture is None:
        # B = id with the power pair on the 4x4 carrier is not a Rota-Baxter operator
        g4 = MatrixLieAlgebra(4)
        bad = GroupRBFixture("identity-operator-n4", g4, power_pair(), conjugation, identity_operator)
        run.add(expect_failure(check_post_group(triangle_from_rrb(bad), run.control_tuples(4, 3)),
                               "identity-operator-triangle-rejected"), "controls")


def suite_tangent(run):
    cfg = run.cfg
    fixtures = _resolve(cfg, {"group-rb", "group-diff", "lie"},
                        ["heisenberg-rb", "identity-pair-weight-one", "heisenberg-diff", "scalar-pair-algebra"])
    for f in fixtures:
        kind = fx.fixture_kind(f)
        if kind == "group-rb":
            _tangent_rb(run, f)
        elif kind == "group-diff":
            _tangent_diff(run, f)
        else:
            _tangent_lie(run, f)


def _basis_table_check(name, table, g, fn, anchor):
    b = g.basis()
    for i, u in enumerate(b):
        for j, v in enumerate(b):
            if table[i][j] != fn(u, v):
                return CheckResult(name, False, anchor, witness={"u": list(map(str, u)), "v": list(map(str, v)),
                                                                 "lhs": list(map(str, table[i][j])),
                                                                 "rhs": list(map(str, fn(u, v)))})
    return CheckResult(name, True, anchor, samples=len(b) ** 2)


def _tangent_rb(run, f):
    tf = rb_group_tangent(f)
    g = f.algebra
    expected_b = _notes_matrix(f, "B")
    if expected_b is not None:
        run.add(equality_check("operator-tangent", tf.B, expected_b, "first-order jet of the operator"), f.name)
    run.add(check_lie_rrb(tf), f.name)
    t = triangle_from_rrb(f)
    d = triangle_tangent(t, g)
    run.add(CheckResult("tangent-coherence", same_table(d, rb_to_postlie(tf)),
                        "tangent of the triangle equals the triangle of the tangent",
                        witness=None if same_table(d, rb_to_postlie(tf)) else
                        {"group": str(d.table), "lie": str(rb_to_postlie(tf).table)}), f.name)
    if isinstance(tf.pair, ScalarPair) and tf.pair.lower_scale == eps:
        run.add(_basis_table_check("triangle-is-bracket", d.table, g,
                                   lambda u, v: g.bracket(tf.B.apply(u), v), "u <| v = [Bu, v]"), f.name)
        run.add(check_prelie(d), f.name)
        run.add(check_bracket_consistency(d, tf.B), f.name)
    run.add(check_postlie(d), f.name)


def _tangent_diff(run, f):
    g = f.algebra
    td = diff_group_tangent(f)
    expected_d = _notes_matrix(f, "D")
    if expected_d is not None:
        run.add(equality_check("derivation-tangent", td.D, expected_d, "first-order jet of the operator"), f.name)
    run.add(check_lie_rdiff(td), f.name)
    nt = novikov_group_tangent(novikov_product(f))
    nl = novikov_lie_from_derivation(td)
    ok = nt.table == nl.table
    run.add(CheckResult("gelfand-dorfman-square", ok, "tangent of the group product equals the Lie product "
                        "of the tangent derivation", witness=None if ok else
                        {"group": str(nt.table), "lie": str(nl.table)}, samples=g.dim ** 2), f.name)
    run.add(_basis_table_check("novikov-tangent-is-bracket", nt.table, g,
                               lambda u, v: g.bracket(u, td.D.apply(v)), "u o v = [u, Dv]"), f.name)
    run.add(check_novikov_lie(nt), f.name)


def _tangent_lie(run, bundle):
    if bundle.rb is not None:
        rb = bundle.rb
        run.add(check_lie_rrb(rb), bundle.name)
        d = rb_to_postlie(rb)
        run.add(check_postlie(d), bundle.name)
        if bundle.name == "scalar-pair-algebra":
            g = rb.algebra
            bad = LieRBFixture("identity-B", g, ScalarPair(), g.ad_basis(), Matrix.identity(g.dim))
            run.add(expect_failure(check_lie_rrb(bad), "identity-B-rejected"), bundle.name)
    if bundle.diff is not None:
        run.add(check_lie_rdiff(bundle.diff), bundle.name)
        run.add(check_novikov_lie(novikov_lie_from_derivation(bundle.diff)), bundle.name)


def suite_ybe(run):
    cfg = run.cfg
    fixtures = _resolve(cfg, {"group-rb"}, ["heisenberg-rb", "identity-pair-weight-one"])
    for f in fixtures:
        t = triangle_from_rrb(f)
        lim_s, br_s = ybe_map(f, t)
        triples = run.tuples(f.dim, 3)
        pairs = [x[:2] for x in triples]
        run.add(run.timed(f"{f.name}/brace", lambda: check_brace(br_s.brace, triples)), f.name)
        run.add(run.timed(f"{f.name}/agreement", lambda: check_solution_agreement(lim_s, br_s, pairs)), f.name)
        run.add(run.timed(f"{f.name}/braid", lambda: check_braid(br_s, triples)), f.name)
        if cfg.fixture is None and f.name == "heisenberg-rb":
            control = run.control_tuples(3, 3)
            run.add(expect_failure(check_braid(corrupted_solution(br_s), control), "corrupted-solution-rejected"),
                    "controls")
    if cfg.fixture is None:
        run.add(check_braid(flip_solution(), run.control_tuples(3, 3)), "flip")
        run.add(expect_failure(check_brace(_mismatched_brace(4), run.control_tuples(4, 3)),
                               "mismatched-brace-rejected"), "controls")


def _mismatched_brace(dim):
    """dot = transported product, circ = matrix product, on a 3-step carrier."""
    from .exact_core import unipotent_inverse
    from .pairs import transported_inverse
    p = power_pair()
    return SkewBrace("mismatched", dim, lambda a, b: transported_mul(p, a, b), lambda a, b: a.matmul(b),
                     lambda a: transported_inverse(p, a), unipotent_inverse, Matrix.identity(dim))


def suite_novikov(run):
    cfg = run.cfg
    fixtures = _resolve(cfg, {"group-diff", "lie"}, ["heisenberg-diff"])
    for f in fixtures:
        if fx.fixture_kind(f) == "lie":
            _tangent_lie(run, f)
            continue
        triples = run.tuples(f.dim, 3)
        pairs = [x[:2] for x in triples]
        n = novikov_product(f)
        run.add(run.timed(f"{f.name}/rdiff", lambda: check_group_rdiff(f, pairs)), f.name)
        run.add(run.timed(f"{f.name}/novikov-group", lambda: check_novikov_group(n, triples)), f.name)
        run.add(run.timed(f"{f.name}/round-trip", lambda: check_round_trip(f, triples)), f.name)
        d = _notes_matrix(f, "D")
        if d is not None and f.dim == 3:
            from .carriers import symbolic_tuples
            sample = [(heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1))] + symbolic_tuples(3, 3) + triples[:10]
            record = run.timed(f"{f.name}/coefficient", lambda: bracket_coefficient_finding(f, d, sample))
            record["fixture"] = f.name
            run.findings.append(record)
            ok = record["selected_coefficient"] is not None
            run.add(CheckResult("bracket-coefficient-determined", ok,
                                "closed form of the Novikov product against its defining limit",
                                witness=None if ok else record, details={"selected": record["selected_coefficient"]}),
                    f.name)
    if cfg.fixture is None:
        hd = fixtures[0]
        proj = NovikovProduct("projection", hd.algebra, hd.pair, hd.act, lambda a, b: b)
        run.add(expect_raise(lambda: diff_from_novikov(proj, run.control_tuples(3, 3)), ValueError,
                             "projection-product-rejected", "a (.) b = b is not a Novikov product"), "controls")
        ident = GroupDiffFixture("identity-operator", hd.algebra, identity_pair(), conjugation, identity_operator)
        run.add(expect_failure(check_group_rdiff(ident, [x[:2] for x in run.control_tuples(3, 2)]),
                               "identity-operator-rejected"), "controls")
        s2 = solvable2()
        run.add(_lie_novikov_bundle(adjoint_diff_fixture(s2, s2.ad((0, 1)), "solvable2-ad-y")), "solvable2")
        run.add(run.timed("random-derivations", lambda: random_derivation_check(cfg.seed, cfg.lie_fixtures)),
                "lie")


def _lie_novikov_bundle(f):
    parts = [check_lie_rdiff(f)]
    if parts[0].passed:
        parts.append(check_novikov_lie(novikov_lie_from_derivation(f)))
    return all_of(f.name, parts, "Novikov Lie algebra from a derivation")


def random_derivation_fixtures(seed, count, max_dim=4):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        g = random_lie_algebra(rng, max_dim)
        out.append(LieDiffFixture(f"random-{k}:{g.name}", g, ScalarPair(), g.ad_basis(), random_derivation(g, rng)))
    return out


def random_derivation_check(seed, count, anchor="Novikov Lie axioms for random derivations"):
    fixtures = random_derivation_fixtures(seed, count)
    for f in fixtures:
        r = _lie_novikov_bundle(f)
        if not r.passed:
            r.details["fixture"] = f.name
            r.details["structure_constants"] = f.algebra.structure_json()
            r.details["derivation"] = f.D.to_json()
            r.name = "random-derivations"
            return r
    return CheckResult("random-derivations", True, anchor, samples=len(fixtures),
                       details={"dims": sorted({f.algebra.dim for f in fixtures})})


def suite_ode_rbivp(run):
    cfg = run.cfg
    (f,) = _resolve(cfg, {"ode"}, ["ode-polynomial-set"])
    h, tol = cfg.tol("h"), cfg.tol("rbivp")
    for u, v in f.pairs:
        r = run.timed(f"rbivp[{u.name},{v.name}]", lambda: check_rbivp(u, v, h, tol, f.x0, f.x1))
        r.name = f"rbivp[{u.name},{v.name}]"
        run.add(r, f.name)
        grid, res = rbivp_residuals(u, v, h, f.x0, f.x1)
        run.csv_rows.extend((r.name, float(x), float(e)) for x, e in zip(grid, res))
    run.add(run.timed("step-halving", lambda: check_step_halving(f.pairs, cfg.tol("h-coarse"),
                                                                 cfg.tol("step-halving-factor"))), f.name)
    paths = _unique([p for pair in f.pairs for p in pair])
    run.add(check_determinant_bounds(paths, h, f.x0, f.x1), f.name)


def suite_ode_group(run):
    cfg = run.cfg
    (f,) = _resolve(cfg, {"ode"}, ["ode-polynomial-set"])
    h, tol = cfg.tol("h"), cfg.tol("ode-group")
    run.add(run.timed("ode-group", lambda: check_ode_group(f.triples, h, tol, f.x0, f.x1)), f.name)
    # commuting diagonal paths multiply by pointwise addition
    diag = [(u, v) for u, v in f.pairs if _is_diagonal(u) and _is_diagonal(v)]
    if diag:
        grid = make_grid(f.x0, f.x1, h)
        worst = 0.0
        for u, v in diag:
            w = DescentPath(u, v)
            sol = solve_flows([w], grid)
            for i, x in enumerate(grid):
                fl = {p: s.values[i] for p, s in sol.items()}
                worst = max(worst, float(np.abs(w.value(x, fl) - u.value(x, fl) - v.value(x, fl)).max()))
        ok = worst <= tol
        run.add(CheckResult("diagonal-additive", ok, "u * v = u + v for commuting diagonal paths",
                            witness=None if ok else {"max_residual": worst}, details={"max_residual": worst},
                            samples=len(diag)), f.name)


def _unique(paths):
    seen, out = set(), []
    for p in paths:
        if id(p) not in seen:
            seen.add(id(p))
            out.append(p)
    return out


def _is_diagonal(p):
    c = getattr(p, "coeffs", None)
    return c is not None and not np.any(c - np.einsum("kii->ki", c)[:, :, None] * np.eye(c.shape[1]))


SUITES = {
    "exact-kernel": suite_exact_kernel,
    "transported": suite_transported,
    "heisenberg-descent": suite_descent,
    "heisenberg-pregroup": suite_pregroup,
    "tangent": suite_tangent,
    "ybe-braid": suite_ybe,
    "novikov": suite_novikov,
    "ode-rbivp": suite_ode_rbivp,
    "ode-group": suite_ode_group,
}


def list_suites():
    return sorted(SUITES) + ["all"]


def run_suite(cfg, csv_rows=None):
    """Run one suite (or "all") and return its Report.

    ``csv_rows``, when a list, receives (check, x, residual) rows from ODE suites.
    """
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(list_suites())}")
    if cfg.mode not in ("random", "symbolic"):
        raise UsageError(f"unknown mode {cfg.mode!r}")
    if cfg.samples < 1:
        raise UsageError("samples must be positive")
    names = sorted(SUITES, key=list(SUITES).index) if cfg.suite == "all" else [cfg.suite]
    if cfg.suite == "all" and cfg.fixture is not None:
        raise UsageError("the 'all' suite runs the built-in fixtures; drop --fixture")
    run = _Run(cfg)
    t0 = time.perf_counter()
    for name in names:
        sub = _Run(cfg)
        SUITES[name](sub)
        prefix = name if cfg.suite == "all" else ""
        for c in sub.checks:
            if prefix:
                c["name"] = f"{prefix}/{c['name']}"
            run.checks.append(c)
        run.findings.extend(dict(f, suite=name) for f in sub.findings)
        run.timing.update({(f"{prefix}/{k}" if prefix else k): v for k, v in sub.timing.items()})
        run.csv_rows.extend(sub.csv_rows)
    run.timing["total"] = round(time.perf_counter() - t0, 4)
    if csv_rows is not None:
        csv_rows.extend(run.csv_rows)
    return Report(cfg.suite, cfg.fixture or "built-in", cfg.echo(), run.checks, run.findings, run.timing)


def list_fixtures():
    return fx.list_fixtures()


__all__ = [
    "DEFAULT_TOLERANCES", "Report", "SUITES", "SuiteConfig", "UsageError", "expect_failure", "list_fixtures",
    "list_suites", "random_derivation_check", "random_derivation_fixtures", "run_suite",
]
