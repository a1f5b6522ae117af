import numpy as np
import pytest

from braceforge.extensions import build_central_extension
from braceforge.gallery import build_alpha_family, build_p5_example
from braceforge.group_families import (
    direct_product, make_abelian, make_dihedral, make_heisenberg, make_symmetric
)

SEED = 20240611


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope='session')
def heisenberg3():
    return make_heisenberg(3, verify=True)


@pytest.fixture(scope='session')
def s3():
    return make_symmetric(3, verify=True)


@pytest.fixture(scope='session')
def small_groups():
    """Every group of order at most 6, up to isomorphism."""
    return [
        make_abelian([1]),
        make_abelian([2]),
        make_abelian([3]),
        make_abelian([4]),
        make_abelian([2, 2]),
        make_abelian([5]),
        make_abelian([6]),
        make_symmetric(3),
    ]


@pytest.fixture(scope='session')
def alpha_instances():
    """The Heisenberg family at p = 3, keyed by alpha; alpha = 1 is the non-split residue."""
    return {alpha: build_alpha_family(3, alpha) for alpha in range(3)}


@pytest.fixture(scope='session')
def split_instance():
    """p = 5, alpha = 1: split, with a nontrivial kappa."""
    return build_alpha_family(5, 1)


@pytest.fixture(scope='session')
def nonsplit_extension(alpha_instances):
    return build_central_extension(alpha_instances[1].kappa)


@pytest.fixture(scope='session')
def split_extension(split_instance):
    return build_central_extension(split_instance.kappa)


@pytest.fixture(scope='session')
def p5_instance():
    return build_p5_example(3)


@pytest.fixture(scope='session')
def dihedral8():
    return make_dihedral(4, verify=True)


@pytest.fixture(scope='session')
def c2_times_c3():
    return direct_product(make_abelian([2]), make_abelian([3]), verify=True)


@pytest.fixture
def loop5():
    """Latin square with identity in which every element is its own inverse; no group of order 5 does that."""
    return [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
