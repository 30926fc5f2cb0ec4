"""Built-in fixtures and the JSON descriptors that produce new ones."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from .lie import LieAlgebra, LinearPair, MatrixLieAlgebra, ScalarPair
from .matrix import Matrix
from .novikov import GroupDiffFixture, LieDiffFixture, exp_half_bracket_operator, grading_derivation, hd_fixture
from .ode import PolynomialPath, path_from_json, random_polynomial_path
from .pairs import action_from_json, conjugation, identity_pair, pair_from_json
from .rota_baxter import (GroupRBFixture, LieRBFixture, exp_linear_operator, heisenberg_b0,
                          heisenberg_factorization_operator, hb_fixture, identity_operator, inverse_operator,
                          trivial_operator)
from .scalars import eps_series


class FixtureError(ValueError):
    pass


@dataclass
class LieBundle:
    """Algebra-level data sharing one pair and action."""

    name: str
    rb: LieRBFixture | None = None
    diff: LieDiffFixture | None = None


@dataclass
class OdeFixture:
    name: str
    pairs: list
    triples: list
    x0: float = 0.0
    x1: float = 1.0
    notes: dict = field(default_factory=dict)


@dataclass
class Entry:
    name: str
    kind: str
    description: str
    build: Callable


def weight_one_fixture():
    """Identity pair on the Heisenberg group with the E23-factor operator."""
    g = MatrixLieAlgebra(3, "heisenberg")
    return GroupRBFixture("identity-pair-weight-one", g, identity_pair(), conjugation,
                          heisenberg_factorization_operator)


def scalar_pair_bundle():
    g = MatrixLieAlgebra(3, "heisenberg")
    ad = g.ad_basis()
    return LieBundle("scalar-pair-algebra",
                     LieRBFixture("scalar-pair-algebra/B0", g, ScalarPair(), ad, heisenberg_b0()),
                     LieDiffFixture("scalar-pair-algebra/D0", g, ScalarPair(), ad, grading_derivation()))


E12 = np.array([[0.0, 1.0], [0.0, 0.0]])


def ode_polynomial_set(seed=2024):
    """The polynomial test set used by the ODE suites.

    * u = x E12 against the constant lower pattern E21;
    * two commuting diagonal paths;
    * three seeded random 2x2 paths of degree at most 2 (entries stay within 3 on [0, 1]).
    """
    u = PolynomialPath([np.zeros((2, 2)), E12], "x*E12")
    v = PolynomialPath([E12.T], "E21")
    d1 = PolynomialPath([np.diag([1.0, 2.0]), np.diag([0.0, -1.0])], "diag1")
    d2 = PolynomialPath([np.diag([-1.0, 0.5])], "diag2")
    rng = np.random.default_rng(seed)
    r = [random_polynomial_path(rng, 2, 2, 1.0, f"random{k}") for k in range(3)]
    pairs = [(u, v), (d1, d2), (r[0], r[1]), (r[1], r[2]), (r[2], r[0])]
    return OdeFixture("ode-polynomial-set", pairs, [tuple(r), (u, v, r[0]), (d1, d2, d1)],
                      notes={"seed": seed})


BUILTINS = {
    e.name: e for e in [
        Entry("heisenberg-rb", "group-rb", "power pair, conjugation, exp o (B0 + 1/2 B0[., B0 .]) o log",
              hb_fixture),
        Entry("heisenberg-diff", "group-diff", "power pair, conjugation, exp o (D0 + 1/2 [., D0 .]) o log",
              hd_fixture),
        Entry("identity-pair-weight-one", "group-rb", "identity pair, conjugation, inverse of the E23 factor",
              weight_one_fixture),
        Entry("scalar-pair-algebra", "lie", "Heisenberg algebra, scalar pair, adjoint action, B0 and D0",
              scalar_pair_bundle),
        Entry("ode-polynomial-set", "ode", "polynomial coefficient paths on [0, 1]", ode_polynomial_set),
    ]
}


def list_fixtures():
    return [{"name": e.name, "kind": e.kind, "description": e.description} for e in BUILTINS.values()]


def load_fixture(ref):
    """A built-in name, a path to a JSON descriptor, or an already parsed dict."""
    if isinstance(ref, dict):
        return fixture_from_json(ref)
    if ref in BUILTINS:
        return BUILTINS[ref].build()
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        try:
            obj = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise FixtureError(f"cannot read fixture {ref}: {exc}") from exc
        obj.setdefault("name", path.stem)
        return fixture_from_json(obj)
    raise FixtureError(f"unknown fixture {ref!r}")


def fixture_kind(fx):
    if isinstance(fx, GroupRBFixture):
        return "group-rb"
    if isinstance(fx, GroupDiffFixture):
        return "group-diff"
    if isinstance(fx, LieBundle):
        return "lie"
    if isinstance(fx, OdeFixture):
        return "ode"
    return type(fx).__name__


# -- descriptors ---------------------------------------------------------------


def _matrix(obj):
    if isinstance(obj, dict):
        return Matrix.from_json(obj)
    return Matrix([[Fraction(x) for x in row] for row in obj])


def linear_map_from_json(obj, n):
    """Rows of a matrix, or a map basis index -> image coordinates."""
    if isinstance(obj, dict) and "entries" not in obj:
        cols = [[Fraction(0)] * n for _ in range(n)]
        for key, vec in obj.items():
            j = int(key[1:]) - 1 if key.startswith("e") else int(key)
            if len(vec) != n:
                raise FixtureError(f"image of basis vector {key} has length {len(vec)}, expected {n}")
            cols[j] = [Fraction(x) for x in vec]
        return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])
    m = _matrix(obj)
    if m.dim != n:
        raise FixtureError(f"linear map has size {m.dim}, algebra has dimension {n}")
    return m


def lie_pair_from_json(obj, n):
    if obj in (None, "scalar"):
        return ScalarPair()
    if obj == "identity":
        return ScalarPair(Fraction(1), Fraction(1))
    if isinstance(obj, dict) and obj.get("kind") == "scalar":
        return ScalarPair(eps_series(obj["lower"]), eps_series(obj["raise"]))
    if isinstance(obj, dict) and obj.get("kind") == "linear":
        return LinearPair(_matrix(obj["lower"]), _matrix(obj["raise"]))
    raise FixtureError(f"unknown Lie pair descriptor {obj!r}")


def _group_operator(op, g):
    kind = op.get("kind") if isinstance(op, dict) else op
    if kind == "exp-conjugate-linear":
        b = linear_map_from_json(op["B"], g.dim)
        return "rb", exp_linear_operator(g, b), {"B": b.to_json()}
    if kind == "exp-half-bracket":
        d = linear_map_from_json(op["D"], g.dim)
        return "diff", exp_half_bracket_operator(g, d), {"D": d.to_json()}
    if kind == "inverse":
        return "rb", inverse_operator, {}
    if kind == "trivial":
        return "rb", trivial_operator, {}
    if kind == "identity":
        return "rb", identity_operator, {}
    if kind == "heisenberg-factorization":
        if g.matrix_dim != 3:
            raise FixtureError("heisenberg-factorization needs dim 3")
        return "rb", heisenberg_factorization_operator, {}
    raise FixtureError(f"unknown operator kind {kind!r}")


def fixture_from_json(obj):
    carrier = obj.get("carrier", "unipotent")
    name = obj.get("name", "custom")
    try:
        if carrier == "unipotent":
            dim = int(obj["dim"])
            if not 1 <= dim <= 6:
                raise FixtureError("dim must be between 1 and 6")
            g = MatrixLieAlgebra(dim)
            pair = pair_from_json(obj.get("pair", "power"))
            action = action_from_json(obj.get("action", "conjugation"))
            kind, op, notes = _group_operator(obj["operator"], g)
            if kind == "rb":
                return GroupRBFixture(name, g, pair, action, op, weight_zero=bool(obj.get("weight_zero", False)),
                                      notes=notes)
            return GroupDiffFixture(name, g, pair, action, op, notes=notes)
        if carrier == "lie":
            g = LieAlgebra.from_json(obj["structure_constants"], name)
            if not g.check_jacobi():
                raise FixtureError("structure constants fail antisymmetry or Jacobi")
            pair = lie_pair_from_json(obj.get("pair"), g.dim)
            action = [_matrix(m) for m in obj["action"]] if "action" in obj else g.ad_basis()
            rb = LieRBFixture(name + "/B", g, pair, action, linear_map_from_json(obj["B"], g.dim)) if "B" in obj else None
            diff = (LieDiffFixture(name + "/D", g, pair, action, linear_map_from_json(obj["D"], g.dim))
                    if "D" in obj else None)
            return LieBundle(name, rb, diff)
        if carrier == "ode":
            paths = {k: path_from_json(v, k) for k, v in obj["paths"].items()}
            pairs = [(paths[a], paths[b]) for a, b in obj.get("pairs", [])]
            triples = [tuple(paths[x] for x in t) for t in obj.get("triples", [])]
            x0, x1 = obj.get("interval", [0.0, 1.0])
            return OdeFixture(name, pairs, triples, float(x0), float(x1))
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise FixtureError(f"malformed fixture descriptor: {exc!r}") from exc
    except ValueError as exc:
        if isinstance(exc, FixtureError):
            raise
        raise FixtureError(str(exc)) from exc
    raise FixtureError(f"unknown carrier {carrier!r}")


__all__ = [
    "BUILTINS", "FixtureError", "LieBundle", "OdeFixture", "fixture_from_json", "fixture_kind",
    "linear_map_from_json", "list_fixtures", "load_fixture", "ode_polynomial_set", "scalar_pair_bundle",
    "weight_one_fixture",
]
