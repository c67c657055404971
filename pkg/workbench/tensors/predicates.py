from typing import Tuple

import numpy as np

from maxent import settings
from tensors.types import Correlation, MarginalPair, ValidityReport
from utils.errors import ScenarioMismatch


def validate_correlation(p: Correlation, tol: float = None, norm_tol: float = None) -> ValidityReport:
    """Nonnegativity within tol and per-(x,y) normalization within max(norm_tol, tol)\n
    Shape problems never reach this point, Correlation refuses to be built with a wrong shape"""
    tol = settings.EXACT_TOL if tol is None else tol
    norm_tol = max(settings.FLOAT_TOL if norm_tol is None else norm_tol, tol)
    violations = []
    worst = 0.0
    negative = np.argwhere(p.values < -tol)
    for x, y, i, j in negative:
        violations.append(f"nonnegativity: p({i},{j}|{x},{y}) = {p.values[x, y, i, j]!r}")
    if negative.size:
        worst = max(worst, float(-p.values.min()))
    sums = p.values.sum(axis=(2, 3))
    residuals = np.abs(sums - 1.0)
    for x, y in np.argwhere(residuals > norm_tol):
        violations.append(f"normalization: sum over (i,j) at (x={x}, y={y}) is {sums[x, y]!r}")
    worst = max(worst, float(residuals.max()))
    return ValidityReport(len(violations) == 0, violations, worst)


def marginals(p: Correlation, tol: float = None) -> MarginalPair:
    """Alice's marginal read at y=0 and Bob's at x=0, well_defined when every other choice agrees within tol"""
    tol = settings.FLOAT_TOL if tol is None else tol
    alice_rows = p.values.sum(axis=3)  # (x, y, i)
    bob_rows = p.values.sum(axis=2)  # (x, y, j)
    alice = alice_rows[:, 0, :].copy()
    bob = bob_rows[0, :, :].copy()
    alice_defect = float(np.abs(alice_rows - alice[:, None, :]).max())
    bob_defect = float(np.abs(bob_rows - bob[None, :, :]).max())
    defect = max(alice_defect, bob_defect)
    return MarginalPair(alice, bob, defect <= tol, defect)


def averaged_marginals(p: Correlation) -> Tuple[np.ndarray, np.ndarray]:
    """Marginals averaged over the other party's inputs"""
    return p.values.sum(axis=3).mean(axis=1), p.values.sum(axis=2).mean(axis=0)


def is_nonsignalling(p: Correlation, tol: float = None) -> Tuple[bool, float]:
    pair = marginals(p, tol)
    return pair.well_defined, pair.max_signalling_defect


def _require_square(p: Correlation) -> None:
    if p.n_a != p.n_b:
        raise ScenarioMismatch(p.n_a, p.n_b)


def is_synchronous(p: Correlation, tol: float = None) -> bool:
    tol = settings.EXACT_TOL if tol is None else tol
    _require_square(p)
    diagonal = p.values[np.arange(p.n_a), np.arange(p.n_a)]  # (x, i, j) at y == x
    off_diagonal = ~np.eye(p.m, dtype=bool)
    return bool(np.all(diagonal[:, off_diagonal] <= tol))


def is_symmetric(p: Correlation, tol: float = None) -> bool:
    tol = settings.EXACT_TOL if tol is None else tol
    _require_square(p)
    return bool(np.all(np.abs(p.values - p.values.transpose(1, 0, 3, 2)) <= tol))


def relabel_outputs(p: Correlation, permutation) -> Correlation:
    """Applies the same output permutation to both parties, p'(s(i),s(j)|x,y) = p(i,j|x,y)"""
    permutation = np.asarray(permutation)
    inverse = np.argsort(permutation)
    return Correlation(p.n_a, p.n_b, p.m, p.values[:, :, inverse][:, :, :, inverse])
