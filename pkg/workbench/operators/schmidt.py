import numpy as np

from maxent import settings
from operators.types import MaxEntRep, OperatorMeasure, SchmidtForm, StateRep
from utils.errors import NotMaximallyEntangled, NotUnitNorm, ShapeMismatch, ZeroVector


SCHMIDT_CUTOFF = 1e-12
NORM_TOL = 1e-12


def _state_matrix(state: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    state = np.asarray(state, dtype=complex).ravel()
    if state.size != d_a * d_b:
        raise ShapeMismatch((d_a * d_b,), state.shape)
    norm = float(np.linalg.norm(state))
    if norm == 0.0:
        raise ZeroVector()
    if abs(norm - 1.0) > NORM_TOL:
        raise NotUnitNorm(norm)
    return state.reshape(d_a, d_b)


def schmidt_decompose(state: np.ndarray, d_a: int, d_b: int) -> SchmidtForm:
    """
    Singular value decomposition of the d_a x d_b reshaping of the state\n
    Coefficients come out descending, those below 1e-12 are dropped together with their vectors
    """
    left, singular, right = np.linalg.svd(_state_matrix(state, d_a, d_b))
    rank = int(np.count_nonzero(singular > SCHMIDT_CUTOFF))
    return SchmidtForm(singular[:rank], left[:, :rank].T, right[:rank])


def is_maximally_entangled(state: np.ndarray, d_a: int, d_b: int, tol: float = None) -> bool:
    tol = settings.FLOAT_TOL if tol is None else tol
    if d_a != d_b:
        return False
    form = schmidt_decompose(state, d_a, d_b)
    if form.coefficients.size != d_a:
        return False
    return bool(np.all(np.abs(form.coefficients - 1.0 / np.sqrt(d_a)) <= tol))


def maximally_entangled_state(d: int) -> np.ndarray:
    """(1/sqrt(d)) sum_k e_k (x) e_k"""
    return np.eye(d, dtype=complex).ravel() / np.sqrt(d)


def canonicalize(rep: StateRep, tol: float = None) -> MaxEntRep:
    """
    Moves both Schmidt bases onto the canonical basis\n
    Alice's operators become U* E U and Bob's V F^T V* with phi = U diag(s) V,
    after which p(i,j|x,y) = (1/d) Tr(E_{x,i} F_{y,j}) with no transpose left in the formula
    """
    if not is_maximally_entangled(rep.state, rep.d_a, rep.d_b, tol):
        coefficients = schmidt_decompose(rep.state, rep.d_a, rep.d_b).coefficients
        raise NotMaximallyEntangled(coefficients)
    left, _, right = np.linalg.svd(rep.state_matrix())
    alice = tuple(
        OperatorMeasure(left.conj().T[None, :, :] @ measure.elements @ left[None, :, :], measure.kind)
        for measure in rep.alice
    )
    bob = tuple(
        OperatorMeasure(right[None, :, :] @ measure.elements.transpose(0, 2, 1) @ right.conj().T[None, :, :], measure.kind)
        for measure in rep.bob
    )
    return MaxEntRep(alice, bob)
