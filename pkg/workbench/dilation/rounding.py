from math import floor
from typing import List, Optional, Tuple

import numpy as np

from log_engine.log import logger
from maxent import settings
from operators.types import MaxEntRep, OperatorMeasure
from utils.errors import InfeasibleDenominator, IrrationalSpectrum, MalformedInput
from utils.types import DilationStrategy, MeasureKind
from dilation.dilate import dilate_commuting_rational
from dilation.spectra import joint_eigenvalues, snap_table


def needed_spectrum_denominator(m: int, eps: float) -> int:
    """Rounding every entry of a row to the grid 1/q and repairing the largest costs at most (m - 1) / (2q) there"""
    return floor(max(m - 1, 1) / eps) + 1


def _is_rational(table: np.ndarray, max_den: int) -> bool:
    try:
        return all(sum(row) == 1 for row in snap_table(table, max_den))
    except IrrationalSpectrum:
        return False


def _round_rows(table: np.ndarray, q: int, bound: float) -> Optional[np.ndarray]:
    """Integer numerators over q, each row summing to q, or None when the grid misses the bound"""
    numerators = np.rint(table * q).astype(int)
    rows = np.arange(len(table))
    largest = np.argmax(table, axis=1)
    numerators[rows, largest] = 0
    numerators[rows, largest] = q - numerators.sum(axis=1)
    if np.any(numerators < 0):
        return None
    if np.abs(table - numerators / q).max() >= bound:
        return None
    return numerators


def _smallest_grid(tables: List[np.ndarray], bound: float, max_den: int) -> Optional[Tuple[int, List[np.ndarray]]]:
    for q in range(1, max_den + 1):
        rounded = [_round_rows(table, q, bound) for table in tables]
        if all(numerators is not None for numerators in rounded):
            return q, rounded
    return None


def _search(tables: List[np.ndarray], bound: float, max_den: int, common: bool) -> Optional[List[Tuple[int, np.ndarray]]]:
    groups = [tables] if common else [[table] for table in tables]
    result = []
    for group in groups:
        found = _smallest_grid(group, bound, max_den)
        if found is None:
            return None
        q, rounded = found
        result.extend((q, numerators) for numerators in rounded)
    return result


def _rebuild(basis: np.ndarray, numerators: np.ndarray, q: int) -> OperatorMeasure:
    diagonals = numerators.T / q  # (m, d)
    elements = np.einsum("ak,ik,bk->iab", basis, diagonals, basis.conj())
    return OperatorMeasure((elements + np.swapaxes(elements, -1, -2).conj()) / 2, MeasureKind.POVM)


def round_to_rational_spectrum(rep: MaxEntRep, eps: float, max_den: int = None, seed: int = 0,
                               common_denominator: bool = False) -> MaxEntRep:
    """
    POVM rep with rational spectra whose correlation is within eps of the input\n
    Every family is diagonalized and each of its eigenvalues moved by less than eps / 2 onto the grid 1/q
    for the smallest q that works, rows keeping an exact unit sum. Families that already have rational
    spectra with denominators <= max_den are kept as they are
    """
    max_den = settings.MAX_DEN if max_den is None else max_den
    if eps <= 0:
        raise MalformedInput(f"eps must be positive, received {eps!r}")
    measures = list(rep.alice) + list(rep.bob)
    decomposed = [joint_eigenvalues(measure, seed + index) for index, measure in enumerate(measures)]
    if all(_is_rational(table, max_den) for _, table in decomposed):
        logger.debug("Spectra are already rational, rep kept")
        return rep.with_kind(MeasureKind.POVM)

    pending = [index for index, (_, table) in enumerate(decomposed) if not _is_rational(table, max_den)]
    if common_denominator:
        pending = list(range(len(measures)))
    found = _search([decomposed[index][1] for index in pending], eps / 2, max_den, common_denominator)
    if found is None:
        raise InfeasibleDenominator(max_den, needed_spectrum_denominator(rep.m, eps))

    rounded = [measure.with_kind(MeasureKind.POVM) for measure in measures]
    for index, (q, numerators) in zip(pending, found):
        rounded[index] = _rebuild(decomposed[index][0], numerators, q)
        logger.debug(f"Family {index} rounded onto the grid 1/{q}")
    return MaxEntRep(tuple(rounded[:rep.n_a]), tuple(rounded[rep.n_a:]))


def approximate_by_max_ent(rep: MaxEntRep, eps: float, max_den: int = None, max_dim: int = None, seed: int = 0,
                           strategy: str = DilationStrategy.Shared) -> MaxEntRep:
    """PVM rep within eps of a commuting POVM rep: round the spectra, then dilate"""
    rounded = round_to_rational_spectrum(rep, eps, max_den, seed, strategy == DilationStrategy.Shared)
    return dilate_commuting_rational(rounded, max_den, max_dim, seed, strategy)
