from typing import List, Sequence

import numpy as np

from maxent import settings
from operators.types import MaxEntRep, OperatorMeasure
from tensors.types import ValidityReport
from utils import make_rng
from utils.errors import RankSumMismatch
from utils.types import MeasureKind


def hermitian_residual(matrix: np.ndarray) -> float:
    return float(np.abs(matrix - matrix.conj().T).max()) if matrix.size else 0.0


def validate_measure(measure: OperatorMeasure, tol: float = None) -> ValidityReport:
    """Checks Hermiticity, completeness and positivity (POVM) or idempotence (PVM)\n
    Reports every failing check together with the worst residual"""
    tol = settings.FLOAT_TOL if tol is None else tol
    violations = []
    worst = 0.0
    for index, element in enumerate(measure.elements):
        residual = hermitian_residual(element)
        worst = max(worst, residual)
        if residual > settings.EXACT_TOL:
            violations.append(f"hermiticity: element {index} residual {residual!r}")
    completeness = float(np.abs(measure.elements.sum(axis=0) - np.eye(measure.d)).max())
    worst = max(worst, completeness)
    if completeness > tol:
        violations.append(f"completeness: sum of elements differs from identity by {completeness!r}")
    for index, element in enumerate(measure.elements):
        hermitian = (element + element.conj().T) / 2
        if measure.kind == MeasureKind.PVM:
            residual = float(np.abs(hermitian @ hermitian - hermitian).max())
            worst = max(worst, residual)
            if residual > tol:
                violations.append(f"idempotence: element {index} residual {residual!r}")
        else:
            lowest = float(np.linalg.eigvalsh(hermitian).min())
            if lowest < -tol:
                worst = max(worst, -lowest)
                violations.append(f"positivity: element {index} has eigenvalue {lowest!r}")
    return ValidityReport(len(violations) == 0, violations, worst)


def validate_rep(rep: MaxEntRep, tol: float = None) -> ValidityReport:
    violations = []
    worst = 0.0
    for party, measures in (("alice", rep.alice), ("bob", rep.bob)):
        for x, measure in enumerate(measures):
            report = validate_measure(measure, tol)
            worst = max(worst, report.worst_residual)
            violations += [f"{party}[{x}] {violation}" for violation in report.violations]
    return ValidityReport(len(violations) == 0, violations, worst)


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """QR of a complex Gaussian matrix with the phases of R's diagonal moved into Q"""
    gaussian = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(gaussian)
    diagonal = np.diag(r)
    phases = np.where(np.abs(diagonal) > 0, diagonal / np.abs(diagonal), 1.0)
    return q * phases[None, :]


def diagonal_projections(ranks: Sequence[int]) -> np.ndarray:
    """Canonical PVM with consecutive diagonal blocks of the given ranks"""
    d = int(sum(ranks))
    elements = np.zeros((len(ranks), d, d), dtype=complex)
    offset = 0
    for index, rank in enumerate(ranks):
        for position in range(offset, offset + rank):
            elements[index, position, position] = 1.0
        offset += rank
    return elements


def random_pvm(d: int, m: int, ranks: Sequence[int], seed: int) -> OperatorMeasure:
    ranks = [int(rank) for rank in ranks]
    if len(ranks) != m or any(rank < 0 for rank in ranks) or sum(ranks) != d:
        raise RankSumMismatch(ranks, d)
    unitary = haar_unitary(d, make_rng(seed))
    elements = unitary[None, :, :] @ diagonal_projections(ranks) @ unitary.conj().T[None, :, :]
    return OperatorMeasure(elements, MeasureKind.PVM)


def random_ranks(d: int, m: int, rng: np.random.Generator) -> List[int]:
    return [int(rank) for rank in rng.multinomial(d, np.ones(m) / m)]


def random_max_ent_rep(n_a: int, n_b: int, m: int, d: int, seed: int) -> MaxEntRep:
    """Random PVM rep, every measure drawn from its own stream of the seed"""
    rng = make_rng(seed)
    alice, bob = [], []
    for index in range(n_a + n_b):
        ranks = random_ranks(d, m, rng)
        measure = random_pvm(d, m, ranks, int(rng.integers(2 ** 31)))
        (alice if index < n_a else bob).append(measure)
    return MaxEntRep(tuple(alice), tuple(bob))


def rank_profile(rep: MaxEntRep) -> List[np.ndarray]:
    """Ranks of every element, [alice (x, i), bob (y, j)]; the marginals of a PVM rep are rank / d"""
    stacks = [rep.alice_stack(), rep.bob_stack()]
    return [np.rint(np.einsum("xiaa->xi", stack).real).astype(int) for stack in stacks]


def deterministic_rep(alice_outputs: Sequence[int], bob_outputs: Sequence[int], m: int) -> MaxEntRep:
    """d=1 rep of the deterministic correlation with the given response functions"""
    def scalar_measure(output: int) -> OperatorMeasure:
        elements = np.zeros((m, 1, 1), dtype=complex)
        elements[output, 0, 0] = 1.0
        return OperatorMeasure(elements, MeasureKind.PVM)
    return MaxEntRep(tuple(scalar_measure(a) for a in alice_outputs), tuple(scalar_measure(b) for b in bob_outputs))
