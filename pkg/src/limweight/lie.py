"""Finite-dimensional Lie algebras by structure constants, plus Lie-level map pairs.

Elements are coordinate tuples.  Linear maps are :class:`Matrix` objects acting
on coordinate columns, so ``B.apply(u)`` is ``B(u)``.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .carriers import coords, from_coords, upper_positions
from .exact_core import laurent_limit_vector
from .matrix import Matrix, commutator
from .scalars import eps, inv_eps, normalize

ZERO = Fraction(0)


def _vzero(n):
    return (ZERO,) * n


def vadd(*vs):
    return tuple(normalize(sum(xs, ZERO)) for xs in zip(*vs))


def vsub(u, v):
    return tuple(normalize(a - b) for a, b in zip(u, v))


def vscale(c, v):
    return tuple(normalize(c * a) if a else ZERO for a in v)


def unit_vector(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


class LieAlgebra:
    """Structure constants ``consts[i][j]`` = coordinates of ``[e_i, e_j]``."""

    def __init__(self, consts, name=""):
        self.consts = tuple(tuple(tuple(Fraction(x) for x in c) for c in row) for row in consts)
        self.dim = len(self.consts)
        self.name = name

    def basis(self):
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def zero(self):
        return _vzero(self.dim)

    def bracket(self, u, v):
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                for k, x in enumerate(self.consts[i][j]):
                    if x:
                        out[k] = out[k] + c * x
        return tuple(normalize(x) for x in out)

    def ad(self, u):
        cols = [self.bracket(u, e) for e in self.basis()]
        return Matrix([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def ad_basis(self):
        return [self.ad(e) for e in self.basis()]

    def check_jacobi(self):
        """Antisymmetry and Jacobi on all basis triples."""
        b = self.basis()
        for x in b:
            if any(self.bracket(x, x)):
                return False
            for y in b:
                if vadd(self.bracket(x, y), self.bracket(y, x)) != self.zero():
                    return False
                for z in b:
                    s = vadd(self.bracket(x, self.bracket(y, z)),
                             self.bracket(y, self.bracket(z, x)),
                             self.bracket(z, self.bracket(x, y)))
                    if any(s):
                        return False
        return True

    def is_derivation(self, d):
        b = self.basis()
        for x in b:
            for y in b:
                lhs = d.apply(self.bracket(x, y))
                rhs = vadd(self.bracket(d.apply(x), y), self.bracket(x, d.apply(y)))
                if lhs != rhs:
                    return False
        return True

    def derivations(self):
        """A basis of Der(g), solved exactly by a rational nullspace."""
        n = self.dim
        # unknown D[k][m] at index k*n + m; D e_m has coordinates D[.][m]
        rows = []
        for i in range(n):
            for j in range(n):
                c = self.consts[i][j]
                for k in range(n):
                    row = [Fraction(0)] * (n * n)
                    for m in range(n):
                        if c[m]:
                            row[k * n + m] += c[m]
                    # minus [D e_i, e_j]_k = sum_p D[p][i] c[p][j][k]
                    for p in range(n):
                        if self.consts[p][j][k]:
                            row[p * n + i] -= self.consts[p][j][k]
                        if self.consts[i][p][k]:
                            row[p * n + j] -= self.consts[i][p][k]
                    rows.append(row)
        null = sympy.Matrix(rows).nullspace() if rows else [sympy.eye(n * n)[:, q] for q in range(n * n)]
        out = []
        for vec in null:
            vals = [Fraction(int(x.p), int(x.q)) for x in vec]
            out.append(Matrix([[vals[k * n + m] for m in range(n)] for k in range(n)]))
        return out

    def structure_json(self):
        return [[[_fmt(x) for x in c] for c in row] for row in self.consts]

    @classmethod
    def from_json(cls, obj, name=""):
        return cls([[[Fraction(x) for x in c] for c in row] for row in obj], name)


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class MatrixLieAlgebra(LieAlgebra):
    """Strictly upper triangular matrices of a given size, basis ordered as in carriers."""

    def __init__(self, dim, name=""):
        self.matrix_dim = dim
        n = len(upper_positions(dim))
        basis = [from_coords(dim, unit_vector(n, i)) for i in range(n)]
        consts = [[coords(commutator(x, y)) for y in basis] for x in basis]
        super().__init__(consts, name or f"n{dim}")

    def to_matrix(self, vec):
        return from_coords(self.matrix_dim, vec)

    def coords(self, m):
        return coords(m)


def strictly_upper(dim):
    return MatrixLieAlgebra(dim)


def heisenberg():
    return MatrixLieAlgebra(3, "heisenberg")


def _from_brackets(n, brackets, name):
    consts = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), vec in brackets.items():
        for k, x in enumerate(vec):
            consts[i][j][k] = x
            consts[j][i][k] = -x
    return LieAlgebra(consts, name)


def abelian(n):
    return _from_brackets(n, {}, f"abelian{n}")


def solvable2():
    """Basis (x, y) with [x, y] = x."""
    return _from_brackets(2, {(0, 1): (1, 0)}, "solvable2")


def direct_sum(g, h):
    n, m = g.dim, h.dim
    consts = [[[0] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                consts[i][j][k] = g.consts[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                consts[n + i][n + j][n + k] = h.consts[i][j][k]
    return LieAlgebra(consts, f"{g.name}+{h.name}")


def known_algebras():
    """Small Lie algebras of dimension at most 4 used as random seeds."""
    heis = _from_brackets(3, {(0, 1): (0, 0, 1)}, "heis3")
    sl2 = _from_brackets(3, {(0, 1): (0, 0, 1), (2, 0): (2, 0, 0), (2, 1): (0, -2, 0)}, "sl2")
    so3 = _from_brackets(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 1, 0)}, "so3")
    filiform = _from_brackets(4, {(0, 1): (0, 0, 1, 0), (0, 2): (0, 0, 0, 1)}, "filiform4")
    gl2 = direct_sum(sl2, abelian(1))
    aff = direct_sum(solvable2(), solvable2())
    return [abelian(2), abelian(3), heis, direct_sum(heis, abelian(1)), solvable2(),
            direct_sum(solvable2(), abelian(1)), direct_sum(solvable2(), abelian(2)),
            sl2, so3, filiform, gl2, aff]


def change_basis(g, p):
    """Structure constants of g in the basis f_i = sum_k p[k][i] e_k."""
    n = g.dim
    pm = sympy.Matrix(n, n, lambda i, j: sympy.Rational(p[i][j].numerator, p[i][j].denominator))
    if pm.det() == 0:
        raise ValueError("singular change of basis")
    pinv = pm.inv()
    cols = [tuple(Fraction(p[k][i]) for k in range(n)) for i in range(n)]
    consts = []
    for i in range(n):
        row = []
        for j in range(n):
            br = g.bracket(cols[i], cols[j])
            new = pinv * sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in br])
            row.append([Fraction(int(x.p), int(x.q)) for x in new])
        consts.append(row)
    return LieAlgebra(consts, g.name + "'")


def random_lie_algebra(rng, max_dim=4):
    """A known algebra of dim <= max_dim in a random rational basis."""
    pool = [g for g in known_algebras() if g.dim <= max_dim]
    g = rng.choice(pool)
    while True:
        p = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(g.dim)] for _ in range(g.dim)]
        try:
            return change_basis(g, p)
        except ValueError:
            continue


def random_derivation(g, rng):
    """A random integer combination of a Der(g) basis (never the zero map if avoidable)."""
    basis = g.derivations()
    if not basis:
        return Matrix.zero(g.dim)
    while True:
        out = Matrix.zero(g.dim)
        for d in basis:
            out = out + d.scale(rng.randint(-2, 2))
        if not out.is_zero():
            return out


# -- Lie-level map pairs ----------------------------------------------------


@dataclass(frozen=True)
class ScalarPair:
    """L = lower_scale * id, H = raise_scale * id."""

    lower_scale: object = eps
    raise_scale: object = inv_eps

    def lower(self, v):
        return vscale(self.lower_scale, v)

    def raise_(self, v):
        return vscale(self.raise_scale, v)

    def is_identity(self):
        return normalize(self.lower_scale * self.raise_scale) == 1


@dataclass(frozen=True)
class LinearPair:
    """General linear pair given by eps-dependent matrices."""

    lower_map: Matrix
    raise_map: Matrix

    def lower(self, v):
        return self.lower_map.apply(v)

    def raise_(self, v):
        return self.raise_map.apply(v)

    def is_identity(self):
        return self.lower_map.matmul(self.raise_map).is_identity()

    def as_scalar(self):
        """The equivalent ScalarPair when both maps are scalar, else None."""
        lo, hi = self.lower_map, self.raise_map
        n = lo.dim
        for m in (lo, hi):
            if any(m[i, j] for i in range(n) for j in range(n) if i != j):
                return None
            if any(m[i, i] != m[0, 0] for i in range(n)):
                return None
        return ScalarPair(lo[0, 0], hi[0, 0])


def identity_lie_pair():
    return ScalarPair(Fraction(1), Fraction(1))


def lim_raise(pair, vec):
    """lim H(vec) as a coordinate vector; raises when the limit does not exist."""
    return laurent_limit_vector(pair.raise_(vec))


def lim_bracket(g, pair, u, v):
    """The transported bracket lim H([L u, L v])."""
    return lim_raise(pair, g.bracket(pair.lower(u), pair.lower(v)))


def act(gens, u, v):
    """gamma_u(v) for an action given by generator matrices gamma_{e_i}."""
    out = _vzero(len(v))
    for ui, gi in zip(u, gens):
        if ui:
            out = vadd(out, vscale(ui, gi.apply(v)))
    return out


def is_limit_abelian(g, pair):
    b = g.basis()
    return all(not any(lim_bracket(g, pair, x, y)) for x in b for y in b)


def bilinear(table, u, v):
    """Extend a basis table ``table[i][j]`` bilinearly."""
    out = _vzero(len(table[0][0]))
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if vj:
                out = vadd(out, vscale(normalize(ui * vj), table[i][j]))
    return out
