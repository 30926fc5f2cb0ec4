"""Unipotent carriers: coordinates, the Heisenberg group, and samplers."""

import random
from fractions import Fraction

from .exact_core import mat_exp, mat_log
from .matrix import Matrix
from .scalars import Poly


def upper_positions(dim):
    """0-based positions of the strictly upper entries, ordered by superdiagonal then row.

    For dim 3 this is (1,2), (2,3), (1,3) in 1-based terms, i.e. E12, E23, E13.
    """
    return [(i, i + k) for k in range(1, dim) for i in range(dim - k)]


def from_coords(dim, vec):
    """Strictly upper matrix with the given coordinates."""
    pos = upper_positions(dim)
    if len(vec) != len(pos):
        raise ValueError(f"expected {len(pos)} coordinates, got {len(vec)}")
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for (i, j), x in zip(pos, vec):
        rows[i][j] = x
    return Matrix(rows)


def coords(m):
    """Coordinates of a strictly upper matrix (entries below the diagonal ignored)."""
    return tuple(m[i, j] for i, j in upper_positions(m.dim))


def exp_coords(dim, vec):
    return mat_exp(from_coords(dim, vec))


def log_coords(g):
    return coords(mat_log(g))


def heis(a, b, c):
    """Heisenberg element exp(a E12 + b E23 + c E13)."""
    return exp_coords(3, (a, b, c))


def heis_coords(g):
    """Inverse of :func:`heis`."""
    return log_coords(g)


def symbolic_coords(prefix, n):
    return tuple(Poly.var(f"{prefix}{k + 1}") for k in range(n))


def symbolic_element(dim, prefix):
    """Unipotent element whose log-coordinates are free indeterminates."""
    return exp_coords(dim, symbolic_coords(prefix, len(upper_positions(dim))))


class Sampler:
    """Seeded source of rational unipotent elements.

    ``bound`` caps numerators and ``denom`` denominators of log-coordinates.
    """

    def __init__(self, seed=0, bound=3, denom=4):
        self.rng = random.Random(seed)
        self.bound = bound
        self.denom = denom

    def scalar(self):
        q = self.rng.randint(1, self.denom)
        return Fraction(self.rng.randint(-self.bound * q, self.bound * q), q)

    def vector(self, n):
        return tuple(self.scalar() for _ in range(n))

    def nilpotent(self, dim):
        return from_coords(dim, self.vector(len(upper_positions(dim))))

    def unipotent(self, dim):
        return mat_exp(self.nilpotent(dim))

    def tuples(self, dim, arity, count):
        return [tuple(self.unipotent(dim) for _ in range(arity)) for _ in range(count)]


def symbolic_tuples(dim, arity):
    """A single tuple of fully symbolic elements, prefixes a, b, c, ..."""
    prefixes = "abcdfg"[:arity]
    return [tuple(symbolic_element(dim, p) for p in prefixes)]


def sample_tuples(dim, arity, count, seed=0, mode="random"):
    if mode == "symbolic":
        return symbolic_tuples(dim, arity)
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    return Sampler(seed).tuples(dim, arity, count)
