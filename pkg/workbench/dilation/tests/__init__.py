from typing import Tuple

import numpy as np

from operators import MaxEntRep, OperatorMeasure, haar_unitary
from utils import make_rng
from utils.types import MeasureKind


def measure_from_spectrum(unitary: np.ndarray, table: np.ndarray) -> OperatorMeasure:
    """Elements U diag(table[:, i]) U^dagger"""
    elements = np.einsum("ak,ki,bk->iab", unitary, table, unitary.conj())
    return OperatorMeasure((elements + np.swapaxes(elements, -1, -2).conj()) / 2, MeasureKind.POVM)


def commuting_rational_measure(d: int, m: int, q: int, rng: np.random.Generator) -> Tuple[OperatorMeasure, np.ndarray]:
    """Commuting POVM whose eigenvalues are random compositions of q into m parts, divided by q"""
    numerators = np.array([rng.multinomial(q, np.ones(m) / m) for _ in range(d)])
    return measure_from_spectrum(haar_unitary(d, rng), numerators / q), numerators


def two_outcome_measure(d: int, rng: np.random.Generator) -> OperatorMeasure:
    spectrum = rng.random(d)
    return measure_from_spectrum(haar_unitary(d, rng), np.stack([spectrum, 1 - spectrum], axis=1))


def two_outcome_rep(n_a: int, n_b: int, d: int, seed: int) -> MaxEntRep:
    rng = make_rng(seed)
    return MaxEntRep(tuple(two_outcome_measure(d, rng) for _ in range(n_a)),
                     tuple(two_outcome_measure(d, rng) for _ in range(n_b)))
