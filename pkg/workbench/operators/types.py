from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from utils import matrix_to_pairs, pairs_to_matrix, pairs_to_vector, require_keys, vector_to_pairs
from utils.errors import MalformedInput, NotUnitNorm, ShapeMismatch
from utils.types import MeasureKind


def _frozen(array: np.ndarray, dtype=complex) -> np.ndarray:
    array = np.array(array, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class OperatorMeasure:
    """m Hermitian d x d matrices summing to the identity, stored as an (m, d, d) complex stack"""
    elements: np.ndarray
    kind: str = MeasureKind.PVM

    def __post_init__(self) -> None:
        elements = _frozen(self.elements)
        if elements.ndim != 3 or elements.shape[1] != elements.shape[2]:
            raise ShapeMismatch(("m", "d", "d"), elements.shape)
        if self.kind not in (MeasureKind.PVM, MeasureKind.POVM):
            raise MalformedInput(f"unknown measure kind {self.kind!r}")
        object.__setattr__(self, "elements", elements)

    @property
    def m(self) -> int:
        return self.elements.shape[0]

    @property
    def d(self) -> int:
        return self.elements.shape[1]

    def with_kind(self, kind: str) -> 'OperatorMeasure':
        return OperatorMeasure(self.elements, kind)

    def json(self) -> Dict[str, Any]:
        return {"d": self.d, "m": self.m, "kind": self.kind,
                "elements": [matrix_to_pairs(element) for element in self.elements]}

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'OperatorMeasure':
        require_keys(data, ("elements",), "operator measure")
        return cls.from_matrices(data["elements"], data.get("kind", MeasureKind.PVM))

    @classmethod
    def from_matrices(cls, matrices: Sequence[Any], kind: str) -> 'OperatorMeasure':
        if not isinstance(matrices, (list, tuple)):
            raise MalformedInput(f"operator measure must be a list of matrices, got {type(matrices).__name__}")
        if len(matrices) == 0:
            raise MalformedInput("operator measure needs at least one element")
        stack = [pairs_to_matrix(matrix) for matrix in matrices]
        if len({matrix.shape for matrix in stack}) != 1:
            raise MalformedInput("operator measure elements differ in dimension")
        return cls(np.stack(stack), kind)


def _measure_list(measures: Sequence[OperatorMeasure]) -> Tuple[OperatorMeasure, ...]:
    return tuple(measures)


def _parse_measures(data: Any, kind: str, party: str) -> Tuple[OperatorMeasure, ...]:
    if not isinstance(data, (list, tuple)):
        raise MalformedInput(f"{party} must be a list of measures, got {type(data).__name__}")
    return tuple(OperatorMeasure.from_matrices(measure, kind) for measure in data)


@dataclass(frozen=True, eq=False)
class MaxEntRep:
    """
    Per-input measures of both parties on a common C^d, evaluated as p(i,j|x,y) = (1/d) Tr(A_{x,i} B_{y,j})\n
    Bob's matrices are stored after the transpose of the canonical form, so the formula carries none
    """
    alice: Tuple[OperatorMeasure, ...]
    bob: Tuple[OperatorMeasure, ...]

    def __post_init__(self) -> None:
        alice, bob = _measure_list(self.alice), _measure_list(self.bob)
        if len(alice) == 0 or len(bob) == 0:
            raise MalformedInput("a representation needs at least one input per party")
        reference = alice[0]
        for measure in alice + bob:
            if (measure.d, measure.m) != (reference.d, reference.m):
                raise ShapeMismatch((reference.d, reference.m), (measure.d, measure.m))
            if measure.kind != reference.kind:
                raise MalformedInput("measure kind must be uniform across a representation")
        object.__setattr__(self, "alice", alice)
        object.__setattr__(self, "bob", bob)

    @property
    def d(self) -> int:
        return self.alice[0].d

    @property
    def m(self) -> int:
        return self.alice[0].m

    @property
    def n_a(self) -> int:
        return len(self.alice)

    @property
    def n_b(self) -> int:
        return len(self.bob)

    @property
    def kind(self) -> str:
        return self.alice[0].kind

    def alice_stack(self) -> np.ndarray:
        return np.stack([measure.elements for measure in self.alice])

    def bob_stack(self) -> np.ndarray:
        return np.stack([measure.elements for measure in self.bob])

    @classmethod
    def from_stacks(cls, alice: np.ndarray, bob: np.ndarray, kind: str = MeasureKind.PVM) -> 'MaxEntRep':
        return cls(tuple(OperatorMeasure(a, kind) for a in alice), tuple(OperatorMeasure(b, kind) for b in bob))

    def with_kind(self, kind: str) -> 'MaxEntRep':
        return MaxEntRep(tuple(a.with_kind(kind) for a in self.alice), tuple(b.with_kind(kind) for b in self.bob))

    def json(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "m": self.m,
            "kind": self.kind,
            "alice": [[matrix_to_pairs(element) for element in measure.elements] for measure in self.alice],
            "bob": [[matrix_to_pairs(element) for element in measure.elements] for measure in self.bob],
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'MaxEntRep':
        require_keys(data, ("alice", "bob"), "maximally entangled representation")
        kind = data.get("kind", MeasureKind.PVM)
        rep = cls(
            _parse_measures(data["alice"], kind, "alice"),
            _parse_measures(data["bob"], kind, "bob"),
        )
        if "d" in data and int(data["d"]) != rep.d:
            raise ShapeMismatch((int(data["d"]),), (rep.d,))
        if "m" in data and int(data["m"]) != rep.m:
            raise ShapeMismatch((int(data["m"]),), (rep.m,))
        return rep


@dataclass(frozen=True, eq=False)
class StateRep:
    """Measures on C^{d_a} and C^{d_b} with a unit vector in the lexicographic product basis (a * d_b + b)"""
    alice: Tuple[OperatorMeasure, ...]
    bob: Tuple[OperatorMeasure, ...]
    state: np.ndarray

    def __post_init__(self) -> None:
        alice, bob = _measure_list(self.alice), _measure_list(self.bob)
        state = _frozen(self.state)
        d_a, d_b = alice[0].d, bob[0].d
        if any(measure.d != d_a for measure in alice) or any(measure.d != d_b for measure in bob):
            raise ShapeMismatch((d_a, d_b), tuple(measure.d for measure in alice + bob))
        if state.shape != (d_a * d_b,):
            raise ShapeMismatch((d_a * d_b,), state.shape)
        norm = float(np.linalg.norm(state))
        if abs(norm - 1.0) > 1e-12:
            raise NotUnitNorm(norm)
        object.__setattr__(self, "alice", alice)
        object.__setattr__(self, "bob", bob)
        object.__setattr__(self, "state", state)

    @property
    def d_a(self) -> int:
        return self.alice[0].d

    @property
    def d_b(self) -> int:
        return self.bob[0].d

    @property
    def m(self) -> int:
        return self.alice[0].m

    def state_matrix(self) -> np.ndarray:
        return self.state.reshape(self.d_a, self.d_b)

    def json(self) -> Dict[str, Any]:
        return {
            "d_a": self.d_a,
            "d_b": self.d_b,
            "m": self.m,
            "kind": self.alice[0].kind,
            "alice": [[matrix_to_pairs(element) for element in measure.elements] for measure in self.alice],
            "bob": [[matrix_to_pairs(element) for element in measure.elements] for measure in self.bob],
            "state": vector_to_pairs(self.state),
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'StateRep':
        require_keys(data, ("alice", "bob", "state"), "state representation")
        kind = data.get("kind", MeasureKind.PVM)
        return cls(
            _parse_measures(data["alice"], kind, "alice"),
            _parse_measures(data["bob"], kind, "bob"),
            pairs_to_vector(data["state"]),
        )


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    coefficients: np.ndarray  # descending, strictly positive
    left_basis: np.ndarray  # rows are the vectors e_k
    right_basis: np.ndarray  # rows are the vectors f_k

    def reconstruct(self) -> np.ndarray:
        return np.einsum("k,ka,kb->ab", self.coefficients, self.left_basis, self.right_basis).ravel()

    def json(self) -> Dict[str, Any]:
        return {
            "coefficients": [float(c) for c in self.coefficients],
            "left_basis": [vector_to_pairs(v) for v in self.left_basis],
            "right_basis": [vector_to_pairs(v) for v in self.right_basis],
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'SchmidtForm':
        require_keys(data, ("coefficients", "left_basis", "right_basis"), "Schmidt form")
        return cls(
            np.asarray(data["coefficients"], dtype=float),
            np.array([pairs_to_vector(v) for v in data["left_basis"]]),
            np.array([pairs_to_vector(v) for v in data["right_basis"]]),
        )
