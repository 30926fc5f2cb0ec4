"""Exact exponential, logarithm, powers, limits and jets on nilpotent carriers.

All series here terminate: a strictly upper triangular matrix of size ``n``
satisfies ``N**n == 0``, and jet generators add at most two more factors.
Limits ``n -> oo`` are taken algebraically as the ``eps**0`` coefficient of
an exact Laurent expansion in ``eps = 1/n``.
"""

from fractions import Fraction
from functools import lru_cache

from .matrix import Matrix
from .scalars import EPS, JET_VARS, Poly, coerce, eps_series, inv_eps, normalize, series_coefficients

T = Poly.var("t")
S = Poly.var("s")


class NotNilpotentError(ValueError):
    pass


class NotUnipotentError(ValueError):
    pass


class LimitDoesNotExist(ArithmeticError):
    """A negative power of eps survives; carries the offending entry."""

    def __init__(self, degree, entry, value):
        self.degree = degree
        self.entry = entry
        self.value = value
        super().__init__(f"limit does not exist: eps^{degree} term at entry {entry} ({value})")


class TangentUndefined(ArithmeticError):
    pass


class DegreeOverflow(ArithmeticError):
    pass


def _power_bound(m):
    return m.dim + len(JET_VARS) + 1


def nil_index(m):
    """Smallest k with ``m**k == 0``; raises if m is not nilpotent."""
    p = Matrix.identity(m.dim)
    for k in range(_power_bound(m) + 1):
        if p.is_zero():
            return k
        p = p.matmul(m)
    raise NotNilpotentError("not nilpotent")


def is_unipotent(u):
    try:
        nil_index(u - Matrix.identity(u.dim))
    except NotNilpotentError:
        return False
    return True


def mat_exp(n):
    """Finite exponential series of a nilpotent matrix."""
    ident = Matrix.identity(n.dim)
    total = ident
    term = ident
    for k in range(1, _power_bound(n) + 2):
        term = term.matmul(n).scale(Fraction(1, k))
        if term.is_zero():
            return total
        total = total + term
    raise NotNilpotentError("not nilpotent")


def mat_log(u):
    """Finite Mercator series of a unipotent matrix."""
    x = u - Matrix.identity(u.dim)
    total = Matrix.zero(u.dim)
    power = x
    for k in range(1, _power_bound(u) + 2):
        if power.is_zero():
            return total
        total = total + power.scale(Fraction((-1) ** (k + 1), k))
        power = power.matmul(x)
    raise NotUnipotentError("not unipotent")


def unipotent_inverse(u):
    """Inverse via the terminating Neumann series ``sum (I - u)**k``."""
    ident = Matrix.identity(u.dim)
    x = ident - u
    total = ident
    power = ident
    for _ in range(_power_bound(u) + 1):
        power = power.matmul(x)
        if power.is_zero():
            return total
        total = total + power
    raise NotUnipotentError("not unipotent")


def degree_bound(dim):
    return (dim - 1) * dim


def unipotent_power(u, exponent):
    """``exp(exponent * log u)``; exponent may be ``eps``, ``1/eps`` or a rational.

    ``exponent = eps`` realizes ``a ** (1/n)`` and ``1/eps`` realizes ``a ** n``.
    The eps-degree of the result must stay within ``+-(dim-1)*dim``.
    """
    out = mat_exp(mat_log(u).scale(exponent))
    bound = degree_bound(u.dim)
    lo, hi = out.degree_range(EPS)
    if lo < -bound or hi > bound:
        raise DegreeOverflow(f"eps-degree range {(lo, hi)} exceeds +-{bound}")
    return out


@lru_cache(maxsize=4096)
def root_n(u):
    """``u ** (1/n)`` as an eps-matrix."""
    return unipotent_power(u, Poly.var(EPS))


@lru_cache(maxsize=4096)
def power_n(u):
    """``u ** n`` as an eps-matrix."""
    return unipotent_power(u, inv_eps)


def limit_exists(m):
    return m.degree_range(EPS)[0] >= 0


def laurent_limit(m):
    """Limit as eps -> 0+: the eps**0 coefficient, if no negative degree survives."""
    for i, j, a in m.entries():
        if isinstance(a, Poly):
            lo = a.degrees(EPS)
            if lo is not None and lo[0] < 0:
                raise LimitDoesNotExist(lo[0], (i + 1, j + 1), a)
    return m.coeff(EPS, 0)


def laurent_limit_vector(vec):
    out = []
    for i, a in enumerate(vec):
        if isinstance(a, Poly):
            lo = a.degrees(EPS)
            if lo is not None and lo[0] < 0:
                raise LimitDoesNotExist(lo[0], (i + 1,), a)
            out.append(a.coeff(EPS, 0))
        else:
            out.append(a)
    return tuple(out)


def eps_matrix(coefficients):
    """Build ``sum_d eps**d * M_d`` from a mapping degree -> Matrix."""
    mats = list(coefficients.values())
    n = mats[0].dim
    out = Matrix.zero(n)
    for d, m in coefficients.items():
        out = out + m.scale(eps_series({d: 1}))
    return out


def eps_coefficients(m):
    """Mapping degree -> Matrix of the nonzero eps-coefficients."""
    lo, hi = m.degree_range(EPS)
    out = {}
    for d in range(lo, hi + 1):
        c = m.coeff(EPS, d)
        if not c.is_zero():
            out[d] = c
    return out


def jet(m0, mt=None, ms=None, mts=None):
    """``m0 + t*mt + s*ms + t*s*mts`` with ``t**2 = s**2 = 0``."""
    out = m0
    if mt is not None:
        out = out + mt.scale(T)
    if ms is not None:
        out = out + ms.scale(S)
    if mts is not None:
        out = out + mts.scale(T * S)
    return out


def jet_parts(m):
    """Split a jet matrix into its (constant, t, s, ts) components."""
    def part(i, j):
        return m.coeff("t", i).coeff("s", j)
    return part(0, 0), part(1, 0), part(0, 1), part(1, 1)


def mixed_partial(f, u, v):
    """ts-coefficient of ``log f(exp(t*u), exp(s*v))``, exactly."""
    a = mat_exp(u.scale(T))
    b = mat_exp(v.scale(S))
    try:
        out = mat_log(f(a, b))
    except (NotUnipotentError, NotNilpotentError) as exc:
        raise TangentUndefined("tangent undefined") from exc
    return jet_parts(out)[3]


def tangent_map(f, u):
    """t-coefficient of ``log f(exp(t*u))``: the differential of f at I."""
    try:
        out = mat_log(f(mat_exp(u.scale(T))))
    except (NotUnipotentError, NotNilpotentError) as exc:
        raise TangentUndefined("tangent undefined") from exc
    return jet_parts(out)[1]


__all__ = [
    "DegreeOverflow", "LimitDoesNotExist", "NotNilpotentError", "NotUnipotentError",
    "S", "T", "TangentUndefined", "coerce", "degree_bound", "eps_coefficients", "eps_matrix",
    "is_unipotent", "jet", "jet_parts", "laurent_limit", "laurent_limit_vector", "limit_exists",
    "mat_exp", "mat_log", "mixed_partial", "nil_index", "normalize", "power_n", "root_n",
    "series_coefficients", "tangent_map", "unipotent_inverse", "unipotent_power",
]
