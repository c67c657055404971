from math import prod
from typing import List, Tuple

import numpy as np
from scipy.linalg import circulant

from log_engine.log import logger
from maxent import settings
from operators.evaluation import trace_correlation
from operators.types import MaxEntRep, OperatorMeasure
from tensors.types import Correlation
from utils import lcm
from utils.errors import DimensionCapExceeded, WeightSumError
from utils.types import DilationStrategy, MeasureKind
from dilation.spectra import joint_eigenvalues, snap_table


def eval_almost_max_ent(rep: MaxEntRep) -> Correlation:
    """(1/d) Tr(P_{x,i} Q_{y,j}) for positive operator measures"""
    return trace_correlation(rep.alice_stack(), rep.bob_stack())


class RationalFamily:
    """One party's measure for one input in its joint eigenbasis, with integer ranks n[k, i] over N"""

    def __init__(self, measure: OperatorMeasure, max_den: int, seed: int) -> None:
        self.basis, table = joint_eigenvalues(measure, seed)
        rationals = snap_table(table, max_den)
        for row in rationals:
            if sum(row) != 1:
                raise WeightSumError(sum(row))
        self.N = lcm(*(value.denominator for row in rationals for value in row))
        self.ranks = np.array([[int(value * self.N) for value in row] for row in rationals], dtype=int)

    @property
    def is_projective(self) -> bool:
        return self.N == 1

    def scaled_ranks(self, N: int) -> np.ndarray:
        return self.ranks * (N // self.N)


def consecutive_projections(ranks: np.ndarray) -> np.ndarray:
    """(m, N) 0/1 diagonals, element i covering the next ranks[i] positions"""
    N = int(ranks.sum())
    diagonals = np.zeros((len(ranks), N))
    offset = 0
    for i, rank in enumerate(ranks):
        diagonals[i, offset:offset + rank] = 1.0
        offset += rank
    return diagonals


def fourier_rotated(diagonal: np.ndarray) -> np.ndarray:
    """F diag(h) F^dagger for the unitary DFT F, which is the circulant matrix of ifft(h)"""
    return circulant(np.fft.ifft(diagonal))


def _families(rep: MaxEntRep, max_den: int, seed: int) -> Tuple[List[RationalFamily], List[RationalFamily]]:
    alice = [RationalFamily(measure, max_den, seed + x) for x, measure in enumerate(rep.alice)]
    bob = [RationalFamily(measure, max_den, seed + rep.n_a + y) for y, measure in enumerate(rep.bob)]
    return alice, bob


def dilation_factors(rep: MaxEntRep, max_den: int = None, seed: int = 0,
                     strategy: str = DilationStrategy.Sequential) -> Tuple[List[int], int]:
    """Per-family denominators N (Alice then Bob) and the output dimension of the dilation"""
    max_den = settings.MAX_DEN if max_den is None else max_den
    alice, bob = _families(rep, max_den, seed)
    factors = [family.N for family in alice + bob]
    if strategy == DilationStrategy.Shared:
        return factors, rep.d * lcm(*factors)
    return factors, rep.d * prod(factors)


def _check_dimension(dimension: int, d: int, max_dim: int) -> None:
    max_dim = settings.MAX_DIM if max_dim is None else max_dim
    if dimension > max_dim:
        logger.error(f"Dilation would reach dimension {dimension}, cap is {max_dim}")
        raise DimensionCapExceeded(dimension, max_dim, dimension // d)


def _hermitian(stack: np.ndarray) -> np.ndarray:
    return (stack + np.swapaxes(stack, -1, -2).conj()) / 2


def _conjugate(stack: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return basis.conj().T @ stack @ basis


def _sequential(rep: MaxEntRep, max_den: int, max_dim: int, seed: int) -> MaxEntRep:
    stacks = [rep.alice_stack(), rep.bob_stack()]
    order = [(0, x) for x in range(rep.n_a)] + [(1, y) for y in range(rep.n_b)]
    _, predicted = dilation_factors(rep, max_den, seed, DilationStrategy.Sequential)
    _check_dimension(predicted, rep.d, max_dim)
    for step, (party, index) in enumerate(order):
        measure = OperatorMeasure(stacks[party][index], MeasureKind.POVM)
        family = RationalFamily(measure, max_den, seed + step)
        if family.is_projective:
            continue
        N, dimension = family.N, stacks[0].shape[-1]
        identity = np.eye(N)
        stacks = [np.kron(_conjugate(stack, family.basis), identity) for stack in stacks]
        diagonals = [consecutive_projections(row) for row in family.ranks]  # k -> (m, N)
        refined = np.zeros((rep.m, dimension * N, dimension * N), dtype=complex)
        for k, block in enumerate(diagonals):
            for i in range(rep.m):
                refined[i, k * N:(k + 1) * N, k * N:(k + 1) * N] = np.diag(block[i])
        stacks[party][index] = refined
        logger.info(f"Dilated {'alice' if party == 0 else 'bob'}[{index}] with N={N}, dimension {dimension} -> {dimension * N}")
    return MaxEntRep.from_stacks(_hermitian(stacks[0]), _hermitian(stacks[1]), MeasureKind.PVM)


def _shared(rep: MaxEntRep, max_den: int, max_dim: int, seed: int) -> MaxEntRep:
    alice, bob = _families(rep, max_den, seed)
    N = lcm(*(family.N for family in alice + bob))
    _check_dimension(rep.d * N, rep.d, max_dim)

    def refine(family: RationalFamily, rotated: bool = False) -> np.ndarray:
        elements = np.zeros((rep.m, rep.d * N, rep.d * N), dtype=complex)
        for k, row in enumerate(family.scaled_ranks(N)):
            vector = family.basis[:, k]
            projector = np.outer(vector, vector.conj())
            for i, diagonal in enumerate(consecutive_projections(row)):
                local = fourier_rotated(diagonal) if rotated else np.diag(diagonal).astype(complex)
                elements[i] += np.kron(projector, local)
        return elements

    alice_stack = np.stack([refine(family) for family in alice])
    bob_stack = np.stack([refine(family, rotated=True) for family in bob])
    logger.info(f"Shared dilation with N={N}, dimension {rep.d} -> {rep.d * N}")
    return MaxEntRep.from_stacks(_hermitian(alice_stack), _hermitian(bob_stack), MeasureKind.PVM)


def dilate_commuting_rational(rep: MaxEntRep, max_den: int = None, max_dim: int = None, seed: int = 0,
                              strategy: str = DilationStrategy.Sequential) -> MaxEntRep:
    """
    PVM rep with the same correlation as a rep of commuting, rational-spectrum POVMs\n
    Sequential refines one family at a time inside its own factor C^N, the output dimension is d * prod(N).
    Shared refines every family inside one factor C^lcm(N): Alice uses diagonal projections and Bob the
    same projections rotated by the Fourier transform, whose entries all have modulus 1 / sqrt(N)
    """
    max_den = settings.MAX_DEN if max_den is None else max_den
    if strategy == DilationStrategy.Shared:
        return _shared(rep, max_den, max_dim, seed)
    if strategy != DilationStrategy.Sequential:
        raise ValueError(f"unknown dilation strategy {strategy!r}")
    return _sequential(rep, max_den, max_dim, seed)
