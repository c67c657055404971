from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from maxent import settings
from utils import require_keys
from utils.errors import MalformedInput, NegativeEntry, ShapeMismatch


@dataclass(frozen=True, eq=False)
class Correlation:
    """
    Probability tensor p(i,j|x,y) stored with index order (x, y, i, j)\n
    Construction checks the shape only, validity is reported by tensors.predicates.validate_correlation
    """
    n_a: int
    n_b: int
    m: int
    values: np.ndarray

    def __post_init__(self) -> None:
        for name in ("n_a", "n_b", "m"):
            if int(getattr(self, name)) < 1:
                raise ShapeMismatch(("positive", "positive", "positive"), (self.n_a, self.n_b, self.m))
        values = np.array(self.values, dtype=float)
        if values.shape != self.shape:
            raise ShapeMismatch(self.shape, values.shape)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> Tuple[int, int, int, int]:
        return (int(self.n_a), int(self.n_b), int(self.m), int(self.m))

    def same_scenario(self, other: 'Correlation') -> bool:
        return self.shape == other.shape

    def require_scenario(self, other: 'Correlation') -> None:
        if not self.same_scenario(other):
            raise ShapeMismatch(self.shape, other.shape)

    def json(self) -> Dict[str, Any]:
        return {
            "n_a": int(self.n_a),
            "n_b": int(self.n_b),
            "m": int(self.m),
            "values": [float(v) for v in self.values.ravel()],
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any], clamp_tol: float = None) -> 'Correlation':
        """Negative entries within -clamp_tol are clamped to 0, larger violations raise NegativeEntry"""
        clamp_tol = settings.CLAMP_TOL if clamp_tol is None else clamp_tol
        require_keys(data, ("n_a", "n_b", "m", "values"), "correlation")
        try:
            n_a, n_b, m = int(data["n_a"]), int(data["n_b"]), int(data["m"])
            flat = np.asarray(data["values"], dtype=float)
        except (ValueError, TypeError) as exc:
            raise MalformedInput(f"correlation fields are not numeric: {exc}")
        if flat.ndim != 1 or flat.size != n_a * n_b * m * m:
            raise ShapeMismatch((n_a * n_b * m * m,), flat.shape)
        if not np.all(np.isfinite(flat)):
            raise MalformedInput("correlation values must be finite")
        worst = float(flat.min()) if flat.size else 0.0
        if worst < -clamp_tol:
            raise NegativeEntry(worst, clamp_tol)
        flat = np.where(flat < 0, 0.0, flat)
        return cls(n_a, n_b, m, flat.reshape(n_a, n_b, m, m))


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    violations: List[str] = field(default_factory=list)
    worst_residual: float = 0.0

    def json(self) -> Dict[str, Any]:
        return {"ok": self.ok, "violations": list(self.violations), "worst_residual": float(self.worst_residual)}

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'ValidityReport':
        require_keys(data, ("ok", "violations"), "validity report")
        return cls(bool(data["ok"]), list(data["violations"]), float(data.get("worst_residual", 0.0)))


@dataclass(frozen=True, eq=False)
class MarginalPair:
    alice: np.ndarray  # (x, i)
    bob: np.ndarray  # (y, j)
    well_defined: bool
    max_signalling_defect: float

    def json(self) -> Dict[str, Any]:
        return {
            "alice": np.asarray(self.alice, dtype=float).tolist(),
            "bob": np.asarray(self.bob, dtype=float).tolist(),
            "well_defined": bool(self.well_defined),
            "max_signalling_defect": float(self.max_signalling_defect),
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'MarginalPair':
        require_keys(data, ("alice", "bob", "well_defined", "max_signalling_defect"), "marginals")
        return cls(
            np.asarray(data["alice"], dtype=float),
            np.asarray(data["bob"], dtype=float),
            bool(data["well_defined"]),
            float(data["max_signalling_defect"]),
        )
