import numpy as np
import pytest

from operators import random_max_ent_rep
from tensors import pr_box, uniform_correlation
from utils import make_rng


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(2022)


@pytest.fixture
def uniform_222():
    return uniform_correlation(2, 2, 2)


@pytest.fixture
def box():
    return pr_box()


@pytest.fixture(params=[1, 2, 3])
def seeded_rep(request):
    return random_max_ent_rep(2, 2, 2, request.param + 1, seed=request.param)
