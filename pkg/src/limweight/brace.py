"""Skew left braces from post-groups and the induced Yang-Baxter solutions."""

from dataclasses import dataclass
from typing import Callable

from .checks import CheckResult, all_of, run_law
from .exact_core import laurent_limit, mat_exp, mat_log, unipotent_inverse
from .matrix import Matrix
from .pairs import transported_inverse, transported_unit
from .post import grossman_star
from .rota_baxter import descent_inverse


@dataclass
class SkewBrace:
    name: str
    dim: int
    dot: Callable
    circ: Callable
    dot_inv: Callable
    circ_inv: Callable
    unit: Matrix


def brace_from_postgroup(t, f):
    """dot = .oo, circ = the Grossman star; f supplies the star inverse."""
    return SkewBrace(f"brace({t.name})", t.dim, t.product,
                     lambda a, b: grossman_star(t, a, b),
                     lambda a: transported_inverse(t.pair, a),
                     lambda a: descent_inverse(f, a),
                     transported_unit(t.pair, t.dim))


def matrix_brace(dim):
    """The trivial brace of a group: both operations are the matrix product."""
    mul = lambda a, b: a.matmul(b)  # noqa: E731
    return SkewBrace("trivial", dim, mul, mul, unipotent_inverse, unipotent_inverse, Matrix.identity(dim))


def check_group_law(name, op, inv, e, triples, anchor):
    firsts = [x[:1] for x in triples]
    return all_of(name, [
        run_law(name + "-associativity", triples, lambda a, b, c: (op(op(a, b), c), op(a, op(b, c))), anchor),
        run_law(name + "-unit", firsts, lambda a: ((op(a, e), op(e, a)), (a, a)), anchor),
        run_law(name + "-inverse", firsts, lambda a: ((op(a, inv(a)), op(inv(a), a)), (e, e)), anchor),
    ], anchor)


def check_brace(br, triples, anchor="a o (b . c) = (a o b) . a^-1 . (a o c)"):
    triples = list(triples)
    dot, circ = br.dot, br.circ

    def law(a, b, c):
        return circ(a, dot(b, c)), dot(dot(circ(a, b), br.dot_inv(a)), circ(a, c))
    out = all_of("skew-brace", [
        check_group_law("dot", dot, br.dot_inv, br.unit, triples, anchor),
        check_group_law("circ", circ, br.circ_inv, br.unit, triples, anchor),
        run_law("brace-compatibility", triples, law, anchor),
    ], anchor)
    out.samples = len(triples)
    return out


def omega(br, a, b):
    """Omega_a(b) = a^-1 . (a o b)."""
    return br.dot(br.dot_inv(a), br.circ(a, b))


def omega_inv(br, a, b):
    """Omega_a^-1(b) = a^+ o (a . b), a^+ the circ-inverse."""
    return br.circ(br.circ_inv(a), br.dot(a, b))


@dataclass
class YbeMap:
    name: str
    s: Callable
    s_inv: Callable | None = None
    tau_inv: Callable | None = None  # b, y -> a with second(S(a, b)) = y
    brace: SkewBrace | None = None

    def __call__(self, a, b):
        return self.s(a, b)


def brace_solution(br):
    """S(a, b) = (x, Omega_x^-1((a o b)^-1 . a . (a o b))) with x = Omega_a(b)."""
    def s(a, b):
        x = omega(br, a, b)
        ab = br.circ(a, b)
        return x, omega_inv(br, x, br.dot(br.dot(br.dot_inv(ab), a), ab))

    def s_inv(x, y):
        xy = br.circ(x, y)
        a = br.dot(xy, br.dot_inv(x))
        return a, br.circ(br.circ_inv(a), xy)

    def tau_inv(b, y):
        beta = br.dot_inv(br.circ_inv(b))
        gamma = omega(br, y, beta)
        w = br.circ_inv(br.dot_inv(gamma))
        z = br.circ(w, y)
        return br.circ(z, br.circ_inv(b))

    return YbeMap(f"S[{br.name}]", s, s_inv, tau_inv, br)


def limit_solution(f, br):
    """Second component lim raise(Gamma_{B(x)^-1}(L(x)^-1 L(a) L(x))), x = Omega_a(b)."""
    p = f.pair

    def s(a, b):
        x = omega(br, a, b)
        lx = p.lower(x)
        inner = unipotent_inverse(lx).matmul(p.lower(a)).matmul(lx)
        y = laurent_limit(p.raise_(f.act(unipotent_inverse(f.operator(x)), inner)))
        return x, y

    return YbeMap(f"S-limit[{f.name}]", s)


def ybe_map(f, t):
    """Solution from a Rota-Baxter fixture and its triangle; returns (limit form, brace form)."""
    br = brace_from_postgroup(t, f)
    return limit_solution(f, br), brace_solution(br)


def flip_solution():
    return YbeMap("flip", lambda a, b: (b, a), lambda x, y: (y, x), lambda b, y: y)


def check_solution_agreement(s1, s2, pairs, anchor="limit formula equals brace formula"):
    return run_law("solution-agreement", pairs, lambda a, b: (s1(a, b), s2(a, b)), anchor)


def braid_sides(s, a, b, c):
    # left: (S x id)(id x S)(S x id)
    x1, y1 = s(a, b)
    y2, z2 = s(y1, c)
    x3, y3 = s(x1, y2)
    left = (x3, y3, z2)
    # right: (id x S)(S x id)(id x S)
    b1, c1 = s(b, c)
    a2, b2 = s(a, b1)
    b3, c3 = s(b2, c1)
    right = (a2, b3, c3)
    return left, right


def check_braid(s, triples, anchor="(S x id)(id x S)(S x id) = (id x S)(S x id)(id x S)"):
    triples = list(triples)
    parts = [run_law("braid", triples, lambda a, b, c: braid_sides(s, a, b, c), anchor)]
    pairs = [x[:2] for x in triples]
    if s.s_inv is not None:
        parts.append(run_law("s-inverse", pairs,
                             lambda a, b: ((s.s_inv(*s(a, b)), s(*s.s_inv(a, b))), ((a, b), (a, b))), anchor))
    if s.brace is not None:
        br = s.brace
        parts.append(run_law("omega-inverse", pairs,
                             lambda a, b: ((omega(br, a, omega_inv(br, a, b)), omega_inv(br, a, omega(br, a, b))),
                                           (b, b)), anchor))
    if s.tau_inv is not None:
        parts.append(run_law("second-component-inverse", pairs,
                             lambda a, b: ((s.tau_inv(b, s(a, b)[1]), s(s.tau_inv(b, a), b)[1]), (a, a)), anchor))
    out = all_of("braid", parts, anchor)
    out.samples = len(triples)
    return out


def corrupted_solution(s):
    """Shifts the E12 coordinate of the first output by the corner coordinate of a.

    Corrections confined to the centre keep the braid relation (both composites
    collect the same central terms), so the corruption has to leak the centre
    into a non-central direction.
    """
    def bad(a, b):
        x, y = s(a, b)
        n = a.dim
        shift = mat_exp(Matrix.unit(n, 1, 2, mat_log(a)[0, n - 1]))
        return shift.matmul(x), y
    return YbeMap(s.name + "[corrupted]", bad)


__all__ = [
    "CheckResult", "SkewBrace", "YbeMap", "brace_from_postgroup", "brace_solution", "braid_sides",
    "check_brace", "check_braid", "check_group_law", "check_solution_agreement", "corrupted_solution",
    "flip_solution", "limit_solution", "matrix_brace", "omega", "omega_inv", "ybe_map",
]
