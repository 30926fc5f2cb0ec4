"""Flows of f' = u(x) f, the weight-zero operator u -> S(u), and its descent group.

Everything here is floating point.  Coefficient paths that depend on other
flows (the descent product u * v = u + S(u) v S(u)^-1 and the inverse path)
are integrated jointly with those flows, so each RK4 stage sees a consistent
value of S(u) rather than an interpolated one.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import CheckResult


class FlowBlowUp(ArithmeticError):
    pass


class CoefficientPath:
    dim = 0

    def deps(self):
        """Paths whose flows enter this coefficient directly."""
        return []

    def parts(self):
        """Sub-coefficients evaluated inside this one."""
        return []

    def value(self, x, flows):
        raise NotImplementedError

    def __call__(self, x, flows=None):
        return self.value(x, flows or {})


class PolynomialPath(CoefficientPath):
    """u(x) = sum_k x**k C_k."""

    def __init__(self, coeffs, name=""):
        self.coeffs = np.asarray(coeffs, dtype=float)
        if self.coeffs.ndim == 2:
            self.coeffs = self.coeffs[None]
        self.dim = self.coeffs.shape[1]
        self.name = name or f"poly{self.coeffs.shape[0] - 1}"

    def value(self, x, flows):
        out = np.zeros((self.dim, self.dim))
        for c in self.coeffs[::-1]:
            out = out * x + c
        return out

    def degree(self):
        return self.coeffs.shape[0] - 1

    def sup_norm_bound(self, x0, x1):
        """Upper bound of the entrywise 1-norm on [x0, x1]."""
        r = max(abs(x0), abs(x1))
        return float(sum(np.abs(c).sum() * r ** k for k, c in enumerate(self.coeffs)))

    def to_json(self):
        return [c.tolist() for c in self.coeffs]


class FunctionPath(CoefficientPath):
    def __init__(self, fn, dim, name="fn"):
        self.fn = fn
        self.dim = dim
        self.name = name

    def value(self, x, flows):
        return np.asarray(self.fn(x), dtype=float)


class DescentPath(CoefficientPath):
    """(u * v)(x) = u(x) + S(u)(x) v(x) S(u)(x)^-1."""

    def __init__(self, u, v):
        self.u, self.v = u, v
        self.dim = u.dim
        self.name = f"({getattr(u, 'name', 'u')}*{getattr(v, 'name', 'v')})"

    def deps(self):
        return [self.u]

    def parts(self):
        return [self.u, self.v]

    def value(self, x, flows):
        f = flows[self.u]
        conj = np.linalg.solve(f.T, (f @ self.v.value(x, flows)).T).T
        return self.u.value(x, flows) + conj


class InversePath(CoefficientPath):
    """-S(u)^-1 u S(u), the inverse of u for the descent product."""

    def __init__(self, u):
        self.u = u
        self.dim = u.dim
        self.name = f"inv({getattr(u, 'name', 'u')})"

    def deps(self):
        return [self.u]

    def parts(self):
        return [self.u]

    def value(self, x, flows):
        f = flows[self.u]
        return -np.linalg.solve(f, self.u.value(x, flows) @ f)


class ZeroPath(PolynomialPath):
    def __init__(self, dim):
        super().__init__(np.zeros((1, dim, dim)), "zero")


@dataclass
class FlowSolution:
    grid: np.ndarray
    values: np.ndarray
    step: float

    def at(self, i):
        return self.values[i]


def _needs(p):
    """Flows required to evaluate the coefficient p at a point."""
    out = list(p.deps())
    for q in p.parts():
        out.extend(_needs(q))
    return out


def _closure(paths):
    """Every flow needed, dependencies before dependents, no duplicates."""
    order, seen = [], set()

    def visit(p):
        if id(p) in seen:
            return
        seen.add(id(p))
        for q in _needs(p):
            visit(q)
        order.append(p)
    for p in paths:
        visit(p)
    return order


def make_grid(x0=0.0, x1=1.0, h=2.0 ** -10):
    n = int(round((x1 - x0) / h))
    if n <= 0 or not math.isclose(n * h, x1 - x0, rel_tol=1e-12):
        raise ValueError("step must divide the interval")
    return np.linspace(x0, x1, n + 1)


def solve_flows(paths, grid, det_floor=1e-12):
    """Classical RK4 for all paths (and their dependencies) on a uniform grid."""
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 2 or np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly increasing")
    order = _closure(paths)
    n = len(grid)
    store = {p: np.empty((n, p.dim, p.dim)) for p in order}
    state = {p: np.eye(p.dim) for p in order}
    for p in order:
        store[p][0] = state[p]

    def deriv(x, st):
        return {p: p.value(x, st) @ st[p] for p in order}

    for i in range(n - 1):
        x, h = grid[i], grid[i + 1] - grid[i]
        k1 = deriv(x, state)
        k2 = deriv(x + h / 2, {p: state[p] + h / 2 * k1[p] for p in order})
        k3 = deriv(x + h / 2, {p: state[p] + h / 2 * k2[p] for p in order})
        k4 = deriv(x + h, {p: state[p] + h * k3[p] for p in order})
        state = {p: state[p] + h / 6 * (k1[p] + 2 * k2[p] + 2 * k3[p] + k4[p]) for p in order}
        for p in order:
            v = state[p]
            if not np.all(np.isfinite(v)) or abs(np.linalg.det(v)) < det_floor:
                raise FlowBlowUp(f"flow blow-up at x={grid[i + 1]:.6g}")
            store[p][i + 1] = v
    step = float(grid[1] - grid[0])
    return {p: FlowSolution(grid, store[p], step) for p in order}


def solve_ivp(u, grid):
    """The flow S(u): f' = u(x) f, f(x0) = I."""
    return solve_flows([u], grid)[u]


def _flows_at(sol, i):
    return {p: s.values[i] for p, s in sol.items()}


def check_rbivp(u, v, h=2.0 ** -10, tol=1e-6, x0=0.0, x1=1.0, anchor="S(u) S(v) = S(u + S(u) v S(u)^-1)"):
    """max over the grid of |S(u) S(v) - S(u * v)|, entrywise max norm."""
    grid = make_grid(x0, x1, h)
    w = DescentPath(u, v)
    try:
        sol = solve_flows([u, v, w], grid)
    except FlowBlowUp as exc:
        return CheckResult("rbivp", False, anchor, error=str(exc))
    diff = np.einsum("nij,njk->nik", sol[u].values, sol[v].values) - sol[w].values
    res = np.abs(diff).max(axis=(1, 2))
    worst = int(np.argmax(res))
    details = {"max_residual": float(res[worst]), "worst_x": float(grid[worst]), "h": h, "tol": tol}
    ok = bool(res[worst] <= tol)
    wit = None if ok else {"x": float(grid[worst]), "residual": float(res[worst]),
                           "lhs": (sol[u].values[worst] @ sol[v].values[worst]).tolist(),
                           "rhs": sol[w].values[worst].tolist()}
    return CheckResult("rbivp", ok, anchor, witness=wit, details=details, samples=len(grid))


def rbivp_residuals(u, v, h=2.0 ** -10, x0=0.0, x1=1.0):
    """(grid, residual per grid point), for CSV output."""
    grid = make_grid(x0, x1, h)
    w = DescentPath(u, v)
    sol = solve_flows([u, v, w], grid)
    diff = np.einsum("nij,njk->nik", sol[u].values, sol[v].values) - sol[w].values
    return grid, np.abs(diff).max(axis=(1, 2))


def step_halving_ratio(u, v, h=2.0 ** -4, x0=0.0, x1=1.0):
    """residual(h) / residual(h/2) for the rbivp identity."""
    r1 = rbivp_residuals(u, v, h, x0, x1)[1].max()
    r2 = rbivp_residuals(u, v, h / 2, x0, x1)[1].max()
    return float(r1), float(r2), float(r1 / r2) if r2 > 0 else math.inf


def check_step_halving(pairs, h=2.0 ** -4, factor=12.0, anchor="fourth-order convergence of the rbivp residual"):
    ratios = []
    for u, v in pairs:
        r1, r2, q = step_halving_ratio(u, v, h)
        ratios.append({"paths": [u.name, v.name], "residual_h": r1, "residual_h2": r2, "ratio": q})
        if q < factor:
            return CheckResult("step-halving", False, anchor, witness=ratios[-1], details={"ratios": ratios})
    return CheckResult("step-halving", True, anchor, details={"ratios": ratios, "h": h}, samples=len(ratios))


def ode_descent_mul(u, v):
    return DescentPath(u, v)


def ode_inverse(u):
    return InversePath(u)


def check_ode_group(triples, h=2.0 ** -10, tol=1e-6, x0=0.0, x1=1.0, anchor="descent group of coefficient paths"):
    """Associativity, unit and inverse of u * v = u + S(u) v S(u)^-1 on the grid."""
    grid = make_grid(x0, x1, h)
    worst = {"associativity": 0.0, "unit": 0.0, "inverse": 0.0}
    for u, v, w in triples:
        left = DescentPath(DescentPath(u, v), w)
        right = DescentPath(u, DescentPath(v, w))
        zero = ZeroPath(u.dim)
        unit_r, unit_l = DescentPath(u, zero), DescentPath(zero, u)
        inv = InversePath(u)
        inv_r, inv_l = DescentPath(u, inv), DescentPath(inv, u)
        try:
            sol = solve_flows([left, right, unit_r, unit_l, inv_r, inv_l], grid)
        except FlowBlowUp as exc:
            return CheckResult("ode-group", False, anchor, error=str(exc))
        for i, x in enumerate(grid):
            fl = _flows_at(sol, i)
            ux = u.value(x, fl)
            worst["associativity"] = max(worst["associativity"],
                                         float(np.abs(left.value(x, fl) - right.value(x, fl)).max()))
            worst["unit"] = max(worst["unit"], float(np.abs(unit_r.value(x, fl) - ux).max()),
                                float(np.abs(unit_l.value(x, fl) - ux).max()))
            worst["inverse"] = max(worst["inverse"], float(np.abs(inv_r.value(x, fl)).max()),
                                   float(np.abs(inv_l.value(x, fl)).max()))
    ok = all(r <= tol for r in worst.values())
    wit = None if ok else {"residuals": worst}
    return CheckResult("ode-group", ok, anchor, witness=wit, details={"max_residuals": worst, "h": h, "tol": tol},
                       samples=len(triples))


def check_homomorphism(pairs, h=2.0 ** -10, tol=1e-6, anchor="S(u * v) = S(u) S(v)"):
    """Same identity as rbivp, read as a homomorphism into the matrix group."""
    worst = 0.0
    for u, v in pairs:
        r = check_rbivp(u, v, h, tol)
        worst = max(worst, r.details.get("max_residual", math.inf))
    ok = worst <= tol
    return CheckResult("ode-homomorphism", ok, anchor, details={"max_residual": worst},
                       witness=None if ok else {"max_residual": worst}, samples=len(pairs))


def check_determinant_bounds(paths, h=2.0 ** -10, x0=0.0, x1=1.0, anchor="det S(u) within exp(+-integral of |u|)"):
    """det S(u)(x) = exp(int tr u) lies in [exp(-L), exp(L)] with L = int |u|_1."""
    grid = make_grid(x0, x1, h)
    for u in paths:
        sol = solve_ivp(u, grid)
        dets = np.linalg.det(sol.values)
        norms = np.array([np.abs(u.value(x, {})).sum() for x in grid])
        cum = np.concatenate([[0.0], np.cumsum((norms[1:] + norms[:-1]) / 2 * np.diff(grid))])
        # the trapezoid sum is off by O(h^2); the slack absorbs it
        slack = 1e-4
        lo, hi = np.exp(-cum - slack), np.exp(cum + slack)
        bad = np.nonzero((dets < lo) | (dets > hi))[0]
        if len(bad):
            i = int(bad[0])
            return CheckResult("determinant-bounds", False, anchor,
                               witness={"path": u.name, "x": float(grid[i]), "det": float(dets[i]),
                                        "bound": float(cum[i])})
    return CheckResult("determinant-bounds", True, anchor, samples=len(paths))


def path_from_json(obj, name=""):
    """A list of matrices (coefficients of x**k) or {"coefficients": [...]}."""
    if isinstance(obj, dict):
        name = obj.get("name", name)
        obj = obj["coefficients"]
    return PolynomialPath([[[float(_num(x)) for x in row] for row in m] for m in obj], name)


def _num(x):
    return Fraction(x) if isinstance(x, str) else x


def random_polynomial_path(rng, dim=2, degree=2, bound=1.0, name=""):
    """Entries uniform in [-bound, bound]; with degree 2 and bound 1 every |u_ij| <= 3 on [0, 1]."""
    coeffs = rng.uniform(-bound, bound, size=(degree + 1, dim, dim))
    return PolynomialPath(coeffs, name or "random")


__all__ = [
    "CoefficientPath", "DescentPath", "FlowBlowUp", "FlowSolution", "FunctionPath", "InversePath",
    "PolynomialPath", "ZeroPath", "check_determinant_bounds", "check_homomorphism", "check_ode_group",
    "check_rbivp", "check_step_halving", "make_grid", "ode_descent_mul", "ode_inverse", "path_from_json",
    "random_polynomial_path", "rbivp_residuals", "solve_flows", "solve_ivp", "step_halving_ratio",
]
