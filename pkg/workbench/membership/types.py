from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from utils import require_keys
from utils.errors import MalformedInput, ShapeMismatch
from utils.types import VerdictStatus


@dataclass(frozen=True, eq=False)
class BellFunctional:
    coefficients: np.ndarray  # (x, y, i, j)
    offset: float = 0.0

    def __post_init__(self) -> None:
        coefficients = np.array(self.coefficients, dtype=float)
        if coefficients.ndim != 4 or coefficients.shape[2] != coefficients.shape[3]:
            raise ShapeMismatch(("n_a", "n_b", "m", "m"), coefficients.shape)
        if not np.all(np.isfinite(coefficients)) or not np.isfinite(self.offset):
            raise MalformedInput("Bell functional entries must be finite")
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.coefficients.shape

    def json(self) -> Dict[str, Any]:
        n_a, n_b, m, _ = self.shape
        return {"n_a": n_a, "n_b": n_b, "m": m, "offset": self.offset,
                "coefficients": [float(c) for c in self.coefficients.ravel()]}

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'BellFunctional':
        require_keys(data, ("n_a", "n_b", "m", "coefficients"), "Bell functional")
        n_a, n_b, m = int(data["n_a"]), int(data["n_b"]), int(data["m"])
        flat = np.asarray(data["coefficients"], dtype=float)
        if flat.size != n_a * n_b * m * m:
            raise ShapeMismatch((n_a * n_b * m * m,), flat.shape)
        return cls(flat.reshape(n_a, n_b, m, m), float(data.get("offset", 0.0)))


@dataclass(frozen=True)
class MembershipVerdict:
    """
    Outcome of the local polytope test\n
    inside carries (vertex index, weight) pairs, outside carries the separating functional with its
    maximum over the vertices and its value on the tested correlation
    """
    status: str
    weights: Optional[List[Tuple[int, float]]] = None
    certificate: Optional[BellFunctional] = None
    classical_bound: Optional[float] = None
    achieved_value: Optional[float] = None
    residual: float = 0.0
    messages: List[str] = field(default_factory=list)

    @property
    def inside(self) -> bool:
        return self.status == VerdictStatus.Inside

    def json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "inside": self.inside, "residual": float(self.residual),
                                "messages": list(self.messages)}
        if self.weights is not None:
            data["weights"] = [[int(v), float(w)] for v, w in self.weights]
        if self.certificate is not None:
            data["certificate"] = self.certificate.json()
            data["classical_bound"] = float(self.classical_bound)
            data["achieved_value"] = float(self.achieved_value)
        return data

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'MembershipVerdict':
        require_keys(data, ("status",), "membership verdict")
        if data["status"] not in (VerdictStatus.Inside, VerdictStatus.Outside, VerdictStatus.Indeterminate):
            raise MalformedInput(f"unknown verdict status {data['status']!r}")
        certificate = data.get("certificate")
        return cls(
            data["status"],
            [(int(v), float(w)) for v, w in data["weights"]] if "weights" in data else None,
            BellFunctional.from_data(certificate) if certificate is not None else None,
            data.get("classical_bound"),
            data.get("achieved_value"),
            float(data.get("residual", 0.0)),
            list(data.get("messages", [])),
        )
