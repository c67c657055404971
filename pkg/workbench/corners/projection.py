import numpy as np

from tensors.types import Correlation
from utils.errors import ScenarioMismatch, ShapeMismatch


def _require_split(p: Correlation, n_alice: int, n_bob: int) -> None:
    if p.n_a != p.n_b:
        raise ScenarioMismatch(p.n_a, p.n_b)
    if n_alice < 1 or n_bob < 1 or n_alice + n_bob != p.n_a:
        raise ShapeMismatch((p.n_a,), (n_alice + n_bob,))


def corner(p: Correlation, n_alice: int, n_bob: int) -> Correlation:
    """p restricted to Alice's inputs x < n_alice and Bob's inputs n_alice + y; values are copied, not recomputed"""
    _require_split(p, n_alice, n_bob)
    return Correlation(n_alice, n_bob, p.m, p.values[:n_alice, n_alice:])


def block_view(p: Correlation) -> np.ndarray:
    """(n m) x (n m) matrix with rows (x, i) and columns (y, j); the corner is its upper right block"""
    if p.n_a != p.n_b:
        raise ScenarioMismatch(p.n_a, p.n_b)
    size = p.n_a * p.m
    return p.values.transpose(0, 2, 1, 3).reshape(size, size)
