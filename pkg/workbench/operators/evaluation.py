import numpy as np

from operators.types import MaxEntRep, StateRep
from tensors.types import Correlation
from utils.errors import ComplexProbability, ShapeMismatch


IMAGINARY_TOL = 1e-10


def _real_probabilities(values: np.ndarray) -> np.ndarray:
    imaginary = float(np.abs(values.imag).max()) if values.size else 0.0
    if imaginary > IMAGINARY_TOL:
        raise ComplexProbability(imaginary, IMAGINARY_TOL)
    real = values.real
    # float noise only, invalid measures keep their negative entries for validation to report
    return np.where((real < 0) & (real > -IMAGINARY_TOL), 0.0, real)


def trace_correlation(alice: np.ndarray, bob: np.ndarray) -> Correlation:
    """p(i,j|x,y) = (1/d) Tr(A_{x,i} B_{y,j}) for stacks shaped (n, m, d, d)"""
    if alice.shape[1:] != bob.shape[1:]:
        raise ShapeMismatch(alice.shape[1:], bob.shape[1:])
    d = alice.shape[-1]
    values = np.einsum("xiab,yjba->xyij", alice, bob) / d
    return Correlation(alice.shape[0], bob.shape[0], alice.shape[1], _real_probabilities(values))


def eval_max_ent(rep: MaxEntRep) -> Correlation:
    return trace_correlation(rep.alice_stack(), rep.bob_stack())


def eval_state_rep(rep: StateRep) -> Correlation:
    """p(i,j|x,y) = <(E_{x,i} (x) F_{y,j}) phi, phi> expanded in the product basis"""
    if rep.alice[0].m != rep.bob[0].m:
        raise ShapeMismatch((rep.alice[0].m,), (rep.bob[0].m,))
    phi = rep.state_matrix()
    alice = np.stack([measure.elements for measure in rep.alice])
    bob = np.stack([measure.elements for measure in rep.bob])
    reduced = np.einsum("ab,xiac,cd->xibd", phi.conj(), alice, phi)
    values = np.einsum("xibd,yjbd->xyij", reduced, bob)
    return Correlation(len(rep.alice), len(rep.bob), rep.m, _real_probabilities(values))
