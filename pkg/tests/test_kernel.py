import random

from limweight.carriers import Sampler
from limweight.exact_core import laurent_limit
from limweight.kernel import (check_exp_log_round_trip, check_jet_commutator, check_kernel, check_limit_product,
                              check_power_homomorphism, kernel_checks, random_eps_matrix)
from limweight.matrix import Matrix
from limweight.scalars import eps_series


def test_random_eps_matrices_have_limits():
    m = random_eps_matrix(random.Random(1), 3)
    assert laurent_limit(m).dim == 3


def test_limit_product_catches_a_pole():
    pole = Matrix([[eps_series({-1: 1}), 0], [0, 1]])
    zero = Matrix([[eps_series({1: 1}), 0], [0, 1]])
    r = check_limit_product([(pole, zero)])
    assert not r.passed


def test_individual_kernel_checks():
    smp = Sampler(5)
    nil = [smp.nilpotent(4) for _ in range(20)]
    assert check_exp_log_round_trip(nil).passed
    assert check_power_homomorphism([smp.unipotent(4) for _ in range(5)]).passed
    assert check_jet_commutator(4).passed


def test_kernel_checks_name_each_dimension():
    names = [r.name for r in kernel_checks(samples=10, seed=2)]
    assert "limit-product[dim=3]" in names and "jet-commutator[dim=4]" in names
    assert len(names) == 10


def test_kernel_symbolic():
    assert check_kernel(symbolic=True, samples=3).passed
