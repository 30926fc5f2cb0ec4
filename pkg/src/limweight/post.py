"""Post-groups and pre-groups with limit-weight, and their Lie-level shadows."""

from dataclasses import dataclass
from typing import Callable

from .checks import CheckResult, all_of, run_law
from .exact_core import laurent_limit, mixed_partial, unipotent_inverse
from .lie import LieAlgebra, act, bilinear, lim_bracket, lim_raise, vadd, vsub
from .matrix import Matrix
from .pairs import MapPair, is_limit_abelian, transported_inverse, transported_mul, transported_unit
from .rota_baxter import descent_inverse, descent_mul, lie_pair_tangent


@dataclass
class TriangleStructure:
    name: str
    dim: int
    pair: MapPair
    triangle: Callable
    triangle_inverse: Callable | None = None
    mul: Callable | None = None  # override of the transported product, for experiments

    def product(self, a, b):
        if self.mul is not None:
            return self.mul(a, b)
        return transported_mul(self.pair, a, b)


@dataclass
class PostLieData:
    name: str
    algebra: LieAlgebra
    pair: object
    table: list  # table[i][j] = e_i <| e_j

    def tri(self, u, v):
        return bilinear(self.table, u, v)


def triangle_from_rrb(f):
    """a |> b = lim raise(Gamma_{B(a)}(lower b)), with its inverse in b."""
    p = f.pair

    def tri(a, b):
        return laurent_limit(p.raise_(f.act(f.operator(a), p.lower(b))))

    def tri_inv(a, b):
        return laurent_limit(p.raise_(f.act(unipotent_inverse(f.operator(a)), p.lower(b))))

    return TriangleStructure(f"triangle({f.name})", f.dim, p, tri, tri_inv)


def trivial_triangle(pair, dim):
    return TriangleStructure("trivial", dim, pair, lambda a, b: b, lambda a, b: b)


def check_post_group(t, triples, anchor="post-group laws"):
    triples = list(triples)
    mul, tri = t.product, t.triangle
    e = transported_unit(t.pair, t.dim)
    firsts = [x[:1] for x in triples]
    parts = [
        run_law("postgroup-distributive", triples,
                lambda a, b, c: (tri(a, mul(b, c)), mul(tri(a, b), tri(a, c))), anchor),
        run_law("postgroup-weighted-associative", triples,
                lambda a, b, c: (tri(mul(a, tri(a, b)), c), tri(a, tri(b, c))), anchor),
        run_law("postgroup-unit", firsts, lambda a: ((tri(a, e), tri(e, a)), (e, a)), anchor),
    ]
    if t.triangle_inverse is not None:
        parts.append(run_law("postgroup-bijective", [x[:2] for x in triples],
                             lambda a, b: ((tri(a, t.triangle_inverse(a, b)), t.triangle_inverse(a, tri(a, b))),
                                           (b, b)), anchor))
    out = all_of("post-group", parts, anchor)
    out.samples = len(triples)
    return out


def check_pregroup(t, triples, anchor="pre-group: limit-abelian post-group"):
    triples = list(triples)
    return all_of("pre-group", [check_post_group(t, triples),
                                is_limit_abelian(t.pair, [x[:2] for x in triples])], anchor)


def grossman_star(t, a, b):
    return t.product(a, t.triangle(a, b))


def check_star(t, f, triples, anchor="a * b = a .oo (a |> b) is the descent group"):
    triples = list(triples)
    star = lambda x, y: grossman_star(t, x, y)  # noqa: E731
    tri = t.triangle
    e = transported_unit(t.pair, t.dim)
    firsts = [x[:1] for x in triples]
    pairs = [x[:2] for x in triples]
    parts = [
        run_law("star-associativity", triples, lambda a, b, c: (star(star(a, b), c), star(a, star(b, c))), anchor),
        run_law("star-unit", firsts, lambda a: ((star(a, e), star(e, a)), (a, a)), anchor),
        run_law("star-inverse", firsts,
                lambda a: ((star(a, descent_inverse(f, a)), star(descent_inverse(f, a), a)), (e, e)), anchor),
        run_law("star-equals-descent", pairs, lambda a, b: (star(a, b), descent_mul(f, a, b)), anchor),
        # id: (G, .oo) -> (G, *) with the action a |> is a weight-one RB operator:
        # |> is an action of (G, *) by automorphisms of (G, .oo)
        run_law("star-action", triples,
                lambda a, b, c: ((tri(star(a, b), c), tri(a, t.product(b, c))),
                                 (tri(a, tri(b, c)), t.product(tri(a, b), tri(a, c)))), anchor),
    ]
    out = all_of("grossman-star", parts, anchor)
    out.samples = len(triples)
    return out


# -- Lie level ------------------------------------------------------------------


def rb_to_postlie(f):
    """u <| v = lim H(gamma_{Bu}(L v))."""
    g, p = f.algebra, f.pair
    b = g.basis()
    table = [[lim_raise(p, act(f.action, f.B.apply(u), p.lower(v))) for v in b] for u in b]
    return PostLieData(f"postlie({f.name})", g, p, table)


def check_postlie(d, basis=None, anchor="post-Lie identities with limit-weight"):
    g, p = d.algebra, d.pair
    basis = basis or g.basis()
    br = lambda x, y: lim_bracket(g, p, x, y)  # noqa: E731
    tri = d.tri
    triples = [(u, v, w) for u in basis for v in basis for w in basis]
    parts = [
        run_law("postlie-derivation", triples,
                lambda u, v, w: (tri(u, br(v, w)), vadd(br(tri(u, v), w), br(v, tri(u, w)))), anchor),
        run_law("postlie-limit", triples,
                lambda u, v, w: (tri(vadd(br(u, v), vsub(tri(u, v), tri(v, u))), w),
                                 vsub(tri(u, tri(v, w)), tri(v, tri(u, w)))), anchor),
    ]
    abelian = all(not any(br(u, v)) for u in basis for v in basis)
    if abelian:
        parts.append(check_prelie(d, basis))
    out = all_of("post-lie", parts, anchor)
    out.details["limit_abelian"] = abelian
    return out


def check_prelie(d, basis=None, anchor="plain pre-Lie identity"):
    basis = basis or d.algebra.basis()
    tri = d.tri

    def law(u, v, w):
        return (vsub(tri(u, tri(v, w)), tri(tri(u, v), w)),
                vsub(tri(v, tri(u, w)), tri(tri(v, u), w)))
    return run_law("pre-lie", [(u, v, w) for u in basis for v in basis for w in basis], law, anchor)


def triangle_tangent(t, g):
    """u <| v from the mixed partial of the group triangle."""
    b = g.basis()
    table = [[g.coords(mixed_partial(t.triangle, g.to_matrix(u), g.to_matrix(v))) for v in b] for u in b]
    return PostLieData(f"tangent({t.name})", g, lie_pair_tangent(t.pair, g), table)


def same_table(d1, d2):
    return d1.table == d2.table


def check_bracket_consistency(d, b_map, anchor="u<|v - v<|u = [Bu,v] + [u,Bv]"):
    g = d.algebra
    pairs = [(u, v) for u in g.basis() for v in g.basis()]
    return run_law("bracket-consistency", pairs,
                   lambda u, v: (vsub(d.tri(u, v), d.tri(v, u)),
                                 vadd(g.bracket(b_map.apply(u), v), g.bracket(u, b_map.apply(v)))), anchor)


def ordinary_product_triangle(t):
    """The same triangle with plain matrix multiplication in place of .oo."""
    return TriangleStructure(t.name + "[ordinary]", t.dim, t.pair, t.triangle, t.triangle_inverse,
                             mul=lambda a, b: a.matmul(b))


def inverse_in(t, a):
    return transported_inverse(t.pair, a)


__all__ = [
    "CheckResult", "Matrix", "PostLieData", "TriangleStructure", "check_bracket_consistency",
    "check_post_group", "check_postlie", "check_pregroup", "check_prelie", "check_star",
    "grossman_star", "inverse_in", "ordinary_product_triangle", "rb_to_postlie", "same_table",
    "triangle_from_rrb", "triangle_tangent", "trivial_triangle",
]
