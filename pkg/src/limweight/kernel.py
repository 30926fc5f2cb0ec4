"""Property checks for the exact kernel: series round trips, powers, limits and jets."""

import random
from fractions import Fraction

from .carriers import Sampler, from_coords, symbolic_coords, upper_positions
from .checks import all_of, run_law
from .exact_core import laurent_limit, mat_exp, mat_log, mixed_partial, unipotent_inverse, unipotent_power
from .matrix import Matrix, commutator
from .pairs import check_pair_identity, power_pair
from .scalars import eps_series


def check_exp_log_round_trip(nilpotents, anchor="log exp N = N and exp log U = U"):
    def law(n):
        u = mat_exp(n)
        return (mat_log(u), mat_exp(mat_log(u))), (n, u)
    return run_law("exp-log-round-trip", ((n,) for n in nilpotents), law, anchor)


def check_power_homomorphism(unipotents, exponents=(2, 3, 5), anchor="U**k by series equals k-fold product"):
    def law(u):
        lhs, rhs = [], []
        for k in exponents:
            prod = Matrix.identity(u.dim)
            for _ in range(k):
                prod = prod.matmul(u)
            lhs.append(unipotent_power(u, Fraction(k)))
            rhs.append(prod)
        # negative powers go through the Neumann inverse
        lhs.append(unipotent_power(u, Fraction(-1)))
        rhs.append(unipotent_inverse(u))
        return lhs, rhs
    return run_law("power-homomorphism", ((u,) for u in unipotents), law, anchor)


def random_eps_matrix(rng, dim, max_degree=2, bound=3, denom=3):
    """Dense matrix whose entries are polynomials in eps with nonnegative degrees."""
    def entry():
        return eps_series({d: Fraction(rng.randint(-bound * denom, bound * denom), rng.randint(1, denom))
                           for d in range(max_degree + 1)})
    return Matrix([[entry() for _ in range(dim)] for _ in range(dim)])


def check_limit_product(pairs, anchor="lim(AB) = lim(A) lim(B) when both limits exist"):
    return run_law("limit-product", pairs,
                   lambda a, b: (laurent_limit(a.matmul(b)), laurent_limit(a).matmul(laurent_limit(b))), anchor)


def check_jet_commutator(dim=3, anchor="ts-part of the group commutator jet is [u, v]"):
    """On every pair of basis matrices of the strictly upper algebra."""
    n = len(upper_positions(dim))
    basis = [from_coords(dim, tuple(Fraction(int(i == k)) for i in range(n))) for k in range(n)]

    def group_commutator(a, b):
        return a.matmul(b).matmul(unipotent_inverse(a)).matmul(unipotent_inverse(b))
    return run_law("jet-commutator", [(u, v) for u in basis for v in basis],
                   lambda u, v: (mixed_partial(group_commutator, u, v), commutator(u, v)), anchor)


def kernel_checks(dims=(3, 4), samples=500, seed=0, symbolic=False):
    """Every exact-kernel property, at each dimension; returns a list of results."""
    out = []
    for dim in dims:
        if symbolic:
            nil = [from_coords(dim, symbolic_coords("a", len(upper_positions(dim))))]
            uni = [mat_exp(n) for n in nil]
        else:
            smp = Sampler(seed + dim)
            nil = [smp.nilpotent(dim) for _ in range(samples)]
            uni = [mat_exp(n) for n in nil]
        rng = random.Random(seed * 7919 + dim)
        eps_pairs = [(random_eps_matrix(rng, dim), random_eps_matrix(rng, dim)) for _ in range(samples)]
        parts = [
            check_exp_log_round_trip(nil),
            check_pair_identity(power_pair(), uni),
            check_limit_product(eps_pairs),
            check_power_homomorphism(uni[: max(1, samples // 5)]),
            check_jet_commutator(dim),
        ]
        for p in parts:
            p.name = f"{p.name}[dim={dim}]"
            p.samples = p.samples or len(nil)
        out.extend(parts)
    return out


def check_kernel(dims=(3, 4), samples=500, seed=0, symbolic=False, anchor="exact kernel"):
    return all_of("exact-kernel", kernel_checks(dims, samples, seed, symbolic), anchor)


__all__ = [
    "check_exp_log_round_trip", "check_jet_commutator", "check_kernel", "check_limit_product",
    "check_power_homomorphism", "kernel_checks", "random_eps_matrix",
]
