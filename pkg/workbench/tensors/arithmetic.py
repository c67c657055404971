from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from maxent import settings
from tensors.types import Correlation
from utils.errors import ShapeMismatch, WeightSumError


Weight = Union[float, Fraction]


def check_weights(weights: Sequence[Weight], tol: float = None) -> np.ndarray:
    tol = settings.EXACT_TOL if tol is None else tol
    if len(weights) == 0:
        raise WeightSumError(0)
    if any(w < 0 for w in weights):
        raise WeightSumError(sum(weights))
    total = sum(weights)
    if abs(float(total) - 1.0) > tol:
        raise WeightSumError(total)
    return np.array([float(w) for w in weights])


def convex_combine(ps: Sequence[Correlation], weights: Sequence[Weight]) -> Correlation:
    if len(ps) != len(weights):
        raise ShapeMismatch((len(ps),), (len(weights),))
    coefficients = check_weights(weights)
    first = ps[0]
    for p in ps[1:]:
        first.require_scenario(p)
    values = np.tensordot(coefficients, np.stack([p.values for p in ps]), axes=1)
    return Correlation(first.n_a, first.n_b, first.m, values)


def sup_distance(p: Correlation, q: Correlation) -> float:
    p.require_scenario(q)
    return float(np.abs(p.values - q.values).max())


def uniform_correlation(n_a: int, n_b: int, m: int) -> Correlation:
    return Correlation(n_a, n_b, m, np.full((n_a, n_b, m, m), 1.0 / (m * m)))


def deterministic_correlation(alice_outputs: Sequence[int], bob_outputs: Sequence[int], m: int) -> Correlation:
    """p(i,j|x,y) = [i == a(x)] [j == b(y)] for response functions a and b"""
    n_a, n_b = len(alice_outputs), len(bob_outputs)
    values = np.zeros((n_a, n_b, m, m))
    for x, i in enumerate(alice_outputs):
        for y, j in enumerate(bob_outputs):
            values[x, y, i, j] = 1.0
    return Correlation(n_a, n_b, m, values)


def product_correlation(alice: np.ndarray, bob: np.ndarray) -> Correlation:
    """p(i,j|x,y) = a(i|x) b(j|y) for row-stochastic a (x, i) and b (y, j)"""
    alice, bob = np.asarray(alice, dtype=float), np.asarray(bob, dtype=float)
    if alice.shape[1] != bob.shape[1]:
        raise ShapeMismatch(alice.shape, bob.shape)
    values = np.einsum("xi,yj->xyij", alice, bob)
    return Correlation(alice.shape[0], bob.shape[0], alice.shape[1], values)


def random_correlation(n_a: int, n_b: int, m: int, rng: np.random.Generator) -> Correlation:
    """Each conditional distribution drawn uniformly from the simplex, generally signalling"""
    values = rng.dirichlet(np.ones(m * m), size=(n_a, n_b)).reshape(n_a, n_b, m, m)
    return Correlation(n_a, n_b, m, values)


def random_nonsignalling(n_a: int, n_b: int, m: int, rng: np.random.Generator, vertices: int = 4) -> Correlation:
    """Random mixture of product correlations, nonsignalling by construction"""
    weights = rng.dirichlet(np.ones(vertices))
    parts = []
    for _ in range(vertices):
        alice = rng.dirichlet(np.ones(m), size=n_a)
        bob = rng.dirichlet(np.ones(m), size=n_b)
        parts.append(np.einsum("xi,yj->xyij", alice, bob))
    values = np.tensordot(weights, np.stack(parts), axes=1)
    return Correlation(n_a, n_b, m, values)


def pr_box() -> Correlation:
    """Nonsignalling box winning CHSH with certainty, 1/2 where i xor j == x*y"""
    values = np.zeros((2, 2, 2, 2))
    for x in range(2):
        for y in range(2):
            for i in range(2):
                for j in range(2):
                    if (i ^ j) == x * y:
                        values[x, y, i, j] = 0.5
    return Correlation(2, 2, 2, values)
