"""Command line: ``limweight verify <suite>``, ``limweight list``, ``limweight ode run``.

Every flag can also come from the environment (``LIMWEIGHT_SAMPLES``,
``LIMWEIGHT_SEED``, ``LIMWEIGHT_MODE``, ``LIMWEIGHT_REPORT``, ``LIMWEIGHT_CSV``,
``LIMWEIGHT_FIXTURE``); an explicit flag wins.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on bad input.
"""

import argparse
import csv
import json
import logging
import os
import sys

from .fixtures import FixtureError, OdeFixture, load_fixture
from .ode import FlowBlowUp, rbivp_residuals
from .suites import DEFAULT_TOLERANCES, SuiteConfig, UsageError, list_fixtures, list_suites, run_suite

log = logging.getLogger("limweight")

ENV = {"samples": "LIMWEIGHT_SAMPLES", "seed": "LIMWEIGHT_SEED", "mode": "LIMWEIGHT_MODE",
       "report": "LIMWEIGHT_REPORT", "csv": "LIMWEIGHT_CSV", "fixture": "LIMWEIGHT_FIXTURE"}


def _env(name, default=None):
    return os.environ.get(ENV[name], default)


def _tolerance(text):
    name, sep, value = text.partition("=")
    if not sep or name not in DEFAULT_TOLERANCES:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE with NAME in {sorted(DEFAULT_TOLERANCES)}")
    try:
        return name, float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad value in {text!r}") from exc


def build_parser():
    p = argparse.ArgumentParser(prog="limweight", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=", ".join(list_suites()))
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--mode", choices=("random", "symbolic"), default=None)
    v.add_argument("--fixture", default=None, help="built-in name or JSON descriptor path")
    v.add_argument("--report", default=None, help="write the JSON report here")
    v.add_argument("--csv", default=None, help="write ODE residuals (check, x, residual) here")
    v.add_argument("--tol", type=_tolerance, action="append", default=[], metavar="NAME=VALUE")
    v.add_argument("--lie-fixtures", type=int, default=50, help="random derivation fixtures for the novikov suite")
    v.add_argument("--no-timing", action="store_true", help="omit timing so reports are byte-stable")

    ls = sub.add_parser("list", help="list built-in fixtures and suites")
    ls.add_argument("--json", action="store_true")

    o = sub.add_parser("ode", help="ODE flows")
    osub = o.add_subparsers(dest="ode_command", required=True)
    r = osub.add_parser("run", help="integrate a fixture's coefficient paths and report rbivp residuals")
    r.add_argument("--fixture", default=None)
    r.add_argument("--h", type=float, default=DEFAULT_TOLERANCES["h"])
    r.add_argument("--tol", type=float, default=DEFAULT_TOLERANCES["rbivp"])
    r.add_argument("--csv", default=None)
    r.add_argument("--report", default=None)
    return p


def _int_env(name, default):
    raw = _env(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV[name]}={raw!r} is not an integer") from None


def cmd_verify(args):
    cfg = SuiteConfig(
        suite=args.suite,
        samples=args.samples if args.samples is not None else _int_env("samples", 100),
        seed=args.seed if args.seed is not None else _int_env("seed", 0),
        mode=args.mode or _env("mode", "random"),
        tolerances=dict(args.tol),
        fixture=args.fixture or _env("fixture"),
        lie_fixtures=args.lie_fixtures,
    )
    log.debug("config: %s", cfg)
    rows = []
    report = run_suite(cfg, csv_rows=rows)
    text = report.to_json(timing=not args.no_timing)
    path = args.report or _env("report")
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    csv_path = args.csv or _env("csv")
    if csv_path:
        _write_csv(csv_path, rows)
    for c in report.checks:
        print(f"{c['status'].upper():5}  {c['name']}")
    n = report.counts()
    print(f"{cfg.suite}: {n['pass']} pass, {n['fail']} fail, {n['error']} error")
    for f in report.findings:
        if f.get("name") == "novikov-bracket-coefficient":
            print(f"finding: coefficient on [u, D v] selected by the defining limit = {f['selected_coefficient']}")
    return report.exit_code


def _write_csv(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "x", "residual"])
        for name, x, r in rows:
            w.writerow([name, repr(x), repr(r)])


def cmd_list(args):
    fixtures = list_fixtures()
    if args.json:
        print(json.dumps({"fixtures": fixtures, "suites": list_suites()}, indent=2, sort_keys=True))
        return 0
    print("fixtures:")
    for f in fixtures:
        print(f"  {f['name']:<26} {f['kind']:<11} {f['description']}")
    print("suites:")
    for s in list_suites():
        print(f"  {s}")
    return 0


def cmd_ode_run(args):
    ref = args.fixture or _env("fixture") or "ode-polynomial-set"
    try:
        f = load_fixture(ref)
    except FixtureError as exc:
        raise UsageError(str(exc)) from exc
    if not isinstance(f, OdeFixture):
        raise UsageError(f"{ref} is not an ODE fixture")
    rows, summary, worst = [], [], 0.0
    for u, v in f.pairs:
        name = f"rbivp[{u.name},{v.name}]"
        try:
            grid, res = rbivp_residuals(u, v, args.h, f.x0, f.x1)
        except FlowBlowUp as exc:
            print(f"{name}: {exc}")
            return 1
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        i = int(res.argmax())
        summary.append({"name": name, "max_residual": float(res[i]), "worst_x": float(grid[i])})
        worst = max(worst, float(res[i]))
        rows.extend((name, float(x), float(r)) for x, r in zip(grid, res))
        print(f"{name:<32} max residual {res[i]:.3e} at x = {grid[i]:.6g}")
    csv_path = args.csv or _env("csv")
    if csv_path:
        _write_csv(csv_path, rows)
    path = args.report or _env("report")
    if path:
        with open(path, "w") as fh:
            json.dump({"fixture": f.name, "h": args.h, "tol": args.tol, "pairs": summary}, fh, indent=2,
                      sort_keys=True)
            fh.write("\n")
    return 0 if worst <= args.tol else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "list":
            return cmd_list(args)
        return cmd_ode_run(args)
    except (UsageError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
