"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]`` or ``[FAIL]`` line (visible under ``pytest -v``
and when the file is run directly with ``python3 tests/test_acceptance.py``).
"""

import sys
import time

import pytest

from limweight.brace import check_brace, check_braid, ybe_map
from limweight.carriers import Sampler, heis, symbolic_tuples
from limweight.fixtures import ode_polynomial_set, weight_one_fixture
from limweight.kernel import kernel_checks
from limweight.lie import MatrixLieAlgebra
from limweight.novikov import diff_group_tangent, grading_derivation, hd_fixture, novikov_group_tangent, novikov_product
from limweight.ode import check_ode_group, check_rbivp, check_step_halving
from limweight.pairs import check_exp_log_sum, power_pair, transported_mul
from limweight.post import check_post_group, check_prelie, check_pregroup, triangle_from_rrb, triangle_tangent
from limweight.rota_baxter import (check_descent_group, check_group_rrb, check_lie_rrb, hb_fixture, heisenberg_b0,
                                   rb_group_tangent)
from limweight.suites import SuiteConfig, run_suite

G = MatrixLieAlgebra(3, "heisenberg")


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    capman = getattr(report, "capman", None)
    if capman is not None:
        with capman.global_and_fixture_disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


@pytest.fixture(autouse=True)
def _uncaptured(request):
    report.capman = request.config.pluginmanager.getplugin("capturemanager")
    yield
    report.capman = None


def failing(results):
    return [r.name for r in results if not r.passed]


def test_criterion_1_exact_kernel():
    t0 = time.perf_counter()
    results = kernel_checks(dims=(3, 4), samples=500, seed=0)
    dt = time.perf_counter() - t0
    wanted = ("exp-log-round-trip", "pair-identity", "limit-product")
    core = [r for r in results if r.name.split("[")[0] in wanted]
    enough = len(core) == 6 and all(r.samples >= 500 for r in core)
    ok = not failing(results) and enough and dt < 10
    report(1, "exact kernel at dims 3 and 4, 500 samples each", ok,
           f"{len(results)} checks, min samples {min(r.samples for r in core)}, {dt:.2f}s, failing {failing(results)}")


def test_criterion_2_transported_symbolic():
    t0 = time.perf_counter()
    p = power_pair()
    r = check_exp_log_sum(p, [t[:2] for t in symbolic_tuples(3, 2)])
    example = transported_mul(p, heis(1, 0, 0), heis(0, 1, 0)) == heis(1, 1, 0)
    dt = time.perf_counter() - t0
    report(2, "a .oo b = exp(log a + log b) symbolically on Heisenberg", r.passed and example and dt < 5,
           f"{dt:.2f}s")


def test_criterion_3_descent_group():
    results = []
    for f in (hb_fixture(), weight_one_fixture()):
        triples = Sampler(3).tuples(3, 3, 100)
        results.append(check_group_rrb(f, [t[:2] for t in triples]))
        results.append(check_descent_group(f, triples))
    enough = all(r.samples >= 100 for r in results)
    report(3, "descent group on HB and the weight-one fixture, 100 triples", not failing(results) and enough,
           f"failing {failing(results)}")


def test_criterion_4_pregroup_symbolic():
    t = triangle_from_rrb(hb_fixture())
    triples = symbolic_tuples(3, 3)
    pre = check_pregroup(t, triples)
    laws = check_post_group(t, triples).details["parts"]
    wanted = {"postgroup-distributive", "postgroup-weighted-associative", "postgroup-unit"}
    ok = pre.passed and wanted <= set(laws) and pre.details["parts"].get("limit-abelian") == "pass"
    report(4, "post-group, unit and limit-abelian laws symbolically on the HB triangle", ok,
           ", ".join(f"{k}={v}" for k, v in sorted({**laws, **pre.details["parts"]}.items())))


def test_criterion_5_tangents():
    hb, hd = hb_fixture(), hd_fixture()
    b0, d0 = heisenberg_b0(), grading_derivation()
    basis = G.basis()
    d = triangle_tangent(triangle_from_rrb(hb), G)
    tri_ok = all(d.table[i][j] == G.bracket(b0.apply(u), v)
                 for i, u in enumerate(basis) for j, v in enumerate(basis))
    prelie = check_prelie(d).passed
    tf = rb_group_tangent(hb)
    rrb = check_lie_rrb(tf).passed and tf.B == b0
    dt = diff_group_tangent(hd).D == d0
    nt = novikov_group_tangent(novikov_product(hd))
    nov_ok = all(nt.mul(u, v) == G.bracket(u, d0.apply(v)) for u in basis for v in basis)
    flags = dict(triangle=tri_ok, prelie=prelie, rb_tangent=rrb, diff_tangent=dt, novikov_tangent=nov_ok)
    report(5, "tangent theorems on the 9 basis pairs", all(flags.values()), str(flags))


def test_criterion_6_brace_and_braid():
    results = []
    for f in (hb_fixture(),):
        _, s = ybe_map(f, triangle_from_rrb(f))
        for triples in (symbolic_tuples(3, 3), Sampler(6).tuples(3, 3, 200)):
            results.append(check_brace(s.brace, triples))
            results.append(check_braid(s, triples))
    braids = [r for r in results if r.name == "braid"]
    inverse_checked = all(r.details["parts"].get("s-inverse") == "pass" for r in braids)
    report(6, "skew brace and braid, symbolic plus 200 random triples, with inverses",
           not failing(results) and inverse_checked, f"failing {failing(results)}")


def test_criterion_7_novikov():
    reports = [run_suite(SuiteConfig("novikov", mode="symbolic", lie_fixtures=50)),
               run_suite(SuiteConfig("novikov", samples=100, seed=7, lie_fixtures=50))]
    checks = [c for r in reports for c in r.checks]
    bad = [c["name"] for c in checks if c["status"] != "pass"]
    random_fixtures = [c for c in checks if c["name"].endswith("random-derivations")]
    fifty = all(c.get("samples") == 50 for c in random_fixtures) and random_fixtures
    findings = [f for r in reports for f in r.findings if f["name"] == "novikov-bracket-coefficient"]
    recorded = findings and all(f["selected_coefficient"] == "1" for f in findings)
    report(7, "Novikov group, 50 random derivations, round trip, coefficient finding",
           not bad and bool(fifty) and bool(recorded),
           f"failing {bad}, selected coefficient {findings[0]['selected_coefficient'] if findings else None}")


def test_criterion_8_ode():
    t0 = time.perf_counter()
    s = ode_polynomial_set()
    rb = [check_rbivp(u, v, h=2 ** -10, tol=1e-6) for u, v in s.pairs]
    worst = max(r.details["max_residual"] for r in rb)
    halving = check_step_halving(s.pairs, h=2 ** -4, factor=12)
    ratio = min(q["ratio"] for q in halving.details["ratios"])
    group = check_ode_group(s.triples, h=2 ** -10, tol=1e-6)
    dt = time.perf_counter() - t0
    ok = all(r.passed for r in rb) and worst <= 1e-6 and halving.passed and group.passed and dt < 60
    report(8, "ODE factorization residuals, step halving and descent group", ok,
           f"max residual {worst:.2e}, min halving ratio {ratio:.1f}, "
           f"group {max(group.details['max_residuals'].values()):.2e}, {dt:.1f}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
