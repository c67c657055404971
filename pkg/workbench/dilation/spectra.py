from fractions import Fraction
from typing import List, Tuple

import numpy as np

from log_engine.log import logger
from maxent import settings
from operators.types import OperatorMeasure
from utils import make_rng
from utils.errors import IrrationalSpectrum, NonCommutingFamily


SNAP_TOL = 1e-9


def commutator_norm(elements: np.ndarray) -> float:
    worst = 0.0
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            commutator = elements[i] @ elements[j] - elements[j] @ elements[i]
            worst = max(worst, float(np.abs(commutator).max()))
    return worst


def check_pairwise_commuting(measure: OperatorMeasure, tol: float = None) -> Tuple[bool, float]:
    tol = settings.FLOAT_TOL if tol is None else tol
    worst = commutator_norm(measure.elements)
    return worst <= tol, worst


def _off_diagonal(basis: np.ndarray, elements: np.ndarray) -> float:
    rotated = basis.conj().T[None, :, :] @ elements @ basis[None, :, :]
    mask = ~np.eye(basis.shape[0], dtype=bool)
    return float(np.abs(rotated[:, mask]).max()) if mask.any() else 0.0


def _refine(basis: np.ndarray, elements: np.ndarray, index: int, tol: float) -> np.ndarray:
    """Splits the span of basis into joint eigenspaces, one element at a time"""
    if index == len(elements) or basis.shape[1] == 1:
        return basis
    restricted = basis.conj().T @ elements[index] @ basis
    values, vectors = np.linalg.eigh((restricted + restricted.conj().T) / 2)
    basis = basis @ vectors
    cuts = np.flatnonzero(np.diff(values) > tol) + 1
    groups = np.split(np.arange(len(values)), cuts)
    return np.hstack([_refine(basis[:, group], elements, index + 1, tol) for group in groups])


def simultaneous_diagonalize(elements: np.ndarray, seed: int = 0, tol: float = None) -> np.ndarray:
    """
    Unitary whose columns diagonalize every matrix of a commuting Hermitian family\n
    Tries the eigenbasis of a random real combination first, then falls back to refining
    degenerate eigenspaces element by element
    """
    tol = settings.SIMDIAG_TOL if tol is None else tol
    elements = np.asarray(elements, dtype=complex)
    d = elements.shape[-1]
    worst = 0.0
    for attempt in range(settings.SIMDIAG_RETRIES):
        weights = make_rng(seed, attempt).standard_normal(len(elements))
        combination = np.tensordot(weights, elements, axes=1)
        _, basis = np.linalg.eigh((combination + combination.conj().T) / 2)
        worst = _off_diagonal(basis, elements)
        if worst <= tol:
            return basis
        logger.debug(f"Random combination left off-diagonal residual {worst!r}, attempt {attempt + 1}")
    basis = _refine(np.eye(d, dtype=complex), elements, 0, tol)
    worst = _off_diagonal(basis, elements)
    if worst > tol:
        raise NonCommutingFamily(worst)
    return basis


def joint_eigenvalues(measure: OperatorMeasure, seed: int = 0, tol: float = None) -> Tuple[np.ndarray, np.ndarray]:
    """(basis, table) with table[k, i] the eigenvalue of element i on basis vector k"""
    ok, worst = check_pairwise_commuting(measure, tol)
    if not ok:
        raise NonCommutingFamily(worst)
    basis = simultaneous_diagonalize(measure.elements, seed)
    rotated = basis.conj().T[None, :, :] @ measure.elements @ basis[None, :, :]
    return basis, np.real(np.einsum("ikk->ki", rotated))


def snap_rational(value: float, max_den: int) -> Fraction:
    snapped = Fraction(float(value)).limit_denominator(max_den)
    if abs(float(snapped) - value) > SNAP_TOL:
        raise IrrationalSpectrum(float(value), max_den)
    return snapped


def snap_table(table: np.ndarray, max_den: int) -> List[List[Fraction]]:
    return [[snap_rational(value, max_den) for value in row] for row in table]


def rational_spectrum(measure: OperatorMeasure, max_den: int = None, seed: int = 0) -> List[List[Fraction]]:
    """Eigenvalues of every element in a common eigenbasis, result[i][k], snapped to denominators <= max_den"""
    max_den = settings.MAX_DEN if max_den is None else max_den
    _, table = joint_eigenvalues(measure, seed)
    return [list(column) for column in zip(*snap_table(table, max_den))]
