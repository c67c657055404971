from typing import Callable, Union

import numpy as np

from membership.types import BellFunctional
from membership.vertices import vertex_matrix
from operators.types import MaxEntRep, OperatorMeasure
from tensors.types import Correlation
from utils.errors import ShapeMismatch
from utils.types import MeasureKind


WinPredicate = Callable[[int, int, int, int], bool]


def bell_value(p: Correlation, f: BellFunctional) -> float:
    if p.shape != f.shape:
        raise ShapeMismatch(f.shape, p.shape)
    return float(np.sum(f.coefficients * p.values)) + f.offset


def game_functional(n_a: int, n_b: int, m: int, win: Union[WinPredicate, np.ndarray],
                    input_weights: np.ndarray = None) -> BellFunctional:
    """Winning probability of a nonlocal game, pi(x,y) on the winning cells (x, y, i, j)"""
    if callable(win):
        table = np.array([[[[bool(win(x, y, i, j)) for j in range(m)] for i in range(m)]
                           for y in range(n_b)] for x in range(n_a)], dtype=float)
    else:
        table = np.asarray(win, dtype=float)
    if table.shape != (n_a, n_b, m, m):
        raise ShapeMismatch((n_a, n_b, m, m), table.shape)
    weights = np.full((n_a, n_b), 1.0 / (n_a * n_b)) if input_weights is None else np.asarray(input_weights, dtype=float)
    if weights.shape != (n_a, n_b):
        raise ShapeMismatch((n_a, n_b), weights.shape)
    return BellFunctional(weights[:, :, None, None] * table)


def chsh_functional() -> BellFunctional:
    """Win when i xor j == x and y, inputs uniform"""
    return game_functional(2, 2, 2, lambda x, y, i, j: (i ^ j) == (x & y))


def classical_value(f: BellFunctional, max_vertices: int = None) -> float:
    """Maximum of f over the deterministic correlations of its scenario"""
    n_a, n_b, m, _ = f.shape
    return float((vertex_matrix(n_a, n_b, m, max_vertices) @ f.coefficients.ravel()).max()) + f.offset


def angle_projections(theta: float) -> OperatorMeasure:
    """Projections onto (cos t, sin t) and its orthogonal complement"""
    direction = np.array([np.cos(theta), np.sin(theta)])
    first = np.outer(direction, direction)
    return OperatorMeasure(np.array([first, np.eye(2) - first]), MeasureKind.PVM)


def chsh_optimal_rep() -> MaxEntRep:
    """
    Qubit measurements reaching the quantum CHSH value cos^2(pi/8) = (2 + sqrt 2) / 4\n
    Every input pair sits pi/8 away from its winning alignment
    """
    alice = (angle_projections(0.0), angle_projections(np.pi / 4))
    bob = (angle_projections(np.pi / 8), angle_projections(-np.pi / 8))
    return MaxEntRep(alice, bob)
