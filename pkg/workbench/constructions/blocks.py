from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from scipy.linalg import block_diag

from constructions.weights import RationalWeight, approximate_weights, check_rational_weights
from log_engine.log import logger
from maxent import settings
from operators.types import MaxEntRep
from utils import lcm, require_keys
from utils.errors import DimensionCapExceeded, MalformedInput, ShapeMismatch


@dataclass(frozen=True)
class BlockPlan:
    """
    Multiplicities of the direct sum realizing sum_k (n_k / M) p_k\n
    Block k is repeated R_k * n_k times, so every rep contributes R_k * d_k * n_k = R * n_k rows
    """
    common_den: int
    numerators: Tuple[int, ...]
    block_dims: Tuple[int, ...]
    R: int
    R_k: Tuple[int, ...]
    total_dim: int

    def multiplicity(self, k: int) -> int:
        return self.R_k[k] * self.numerators[k]

    def json(self) -> Dict[str, Any]:
        return {
            "M": self.common_den,
            "n": list(self.numerators),
            "d": list(self.block_dims),
            "R": self.R,
            "R_k": list(self.R_k),
            "total_dim": self.total_dim,
        }

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> 'BlockPlan':
        require_keys(data, ("M", "n", "d", "R", "R_k", "total_dim"), "block plan")
        plan = cls(int(data["M"]), tuple(map(int, data["n"])), tuple(map(int, data["d"])),
                   int(data["R"]), tuple(map(int, data["R_k"])), int(data["total_dim"]))
        if sum(r * d * n for r, d, n in zip(plan.R_k, plan.block_dims, plan.numerators)) != plan.total_dim:
            raise MalformedInput("block plan multiplicities do not add up to total_dim")
        return plan


def _check_cap(dimension: int, max_dim: int, factor: int = None) -> None:
    max_dim = settings.MAX_DIM if max_dim is None else max_dim
    if dimension > max_dim:
        logger.error(f"Dimension {dimension} refused, cap is {max_dim}")
        raise DimensionCapExceeded(dimension, max_dim, factor)


def plan_blocks(dims: Sequence[int], weights: Sequence[RationalWeight], max_dim: int = None) -> BlockPlan:
    weights = check_rational_weights(weights)
    dims = tuple(int(d) for d in dims)
    if len(dims) != len(weights):
        raise ShapeMismatch((len(dims),), (len(weights),))
    if any(d < 1 for d in dims):
        raise MalformedInput(f"block dimensions must be positive, received {list(dims)}")
    common_den = lcm(*(w.denominator for w in weights))
    numerators = tuple(int(w * common_den) for w in weights)
    R = prod(dims)
    plan = BlockPlan(common_den, numerators, dims, R, tuple(R // d for d in dims), R * common_den)
    _check_cap(plan.total_dim, max_dim, common_den)
    logger.info(f"Block plan M={common_den} R={R} total_dim={plan.total_dim}")
    return plan


def _repeat(elements: np.ndarray, copies: int) -> np.ndarray:
    """copies-fold direct sum of every matrix in an (..., d, d) stack"""
    identity = np.eye(copies)
    return np.einsum("ab,...cd->...acbd", identity, elements).reshape(
        elements.shape[:-2] + (copies * elements.shape[-2], copies * elements.shape[-1]))


def _direct_sum(stacks: Sequence[np.ndarray]) -> np.ndarray:
    """Entrywise block_diag of equally shaped (n, m, d_k, d_k) stacks"""
    n, m = stacks[0].shape[:2]
    return np.array([[block_diag(*(stack[x, i] for stack in stacks)) for i in range(m)] for x in range(n)])


def _require_common_scenario(reps: Sequence[MaxEntRep]) -> None:
    reference = reps[0]
    for rep in reps[1:]:
        if (rep.n_a, rep.n_b, rep.m) != (reference.n_a, reference.n_b, reference.m):
            raise ShapeMismatch((reference.n_a, reference.n_b, reference.m), (rep.n_a, rep.n_b, rep.m))
        if rep.kind != reference.kind:
            raise MalformedInput("reps combined into one direct sum must share their measure kind")


def rational_combination(reps: Sequence[MaxEntRep], weights: Sequence[RationalWeight], max_dim: int = None) -> MaxEntRep:
    """
    Direct sum E_{x,i} = (+)_k (+)_{R_k n_k copies} E^(k)_{x,i}, likewise for Bob\n
    The normalized trace at dimension R * M weighs block k by R_k d_k n_k / (R M) = n_k / M
    """
    if len(reps) == 0:
        raise MalformedInput("rational combination needs at least one rep")
    _require_common_scenario(reps)
    plan = plan_blocks([rep.d for rep in reps], weights, max_dim)
    used = [k for k in range(len(reps)) if plan.numerators[k] > 0]
    alice = _direct_sum([_repeat(reps[k].alice_stack(), plan.multiplicity(k)) for k in used])
    bob = _direct_sum([_repeat(reps[k].bob_stack(), plan.multiplicity(k)) for k in used])
    return MaxEntRep.from_stacks(alice, bob, reps[0].kind)


def embed_factorial(rep: MaxEntRep, k: int, max_dim: int = None) -> MaxEntRep:
    """k-fold direct sum of every operator, same correlation at dimension d * k"""
    if k < 1:
        raise MalformedInput(f"embedding multiplicity must be positive, received {k}")
    _check_cap(rep.d * k, max_dim, k)
    if k == 1:
        return rep
    return MaxEntRep.from_stacks(_repeat(rep.alice_stack(), k), _repeat(rep.bob_stack(), k), rep.kind)


def embed_to_factorial(rep: MaxEntRep, max_dim: int = None) -> MaxEntRep:
    """Places a dimension d rep at dimension d!, the level of the tower containing it"""
    return embed_factorial(rep, factorial(rep.d - 1), max_dim)


def tower_step(rep: MaxEntRep, level: int, max_dim: int = None) -> MaxEntRep:
    """From dimension level! to (level + 1)!"""
    if rep.d != factorial(level):
        raise ShapeMismatch((factorial(level),), (rep.d,))
    return embed_factorial(rep, level + 1, max_dim)


def approximate_combination(reps: Sequence[MaxEntRep], targets: Sequence[float], eps: float,
                            max_den: int = None, max_dim: int = None) -> Tuple[MaxEntRep, List[Fraction]]:
    """Rational weights within eps / N of the targets, then their direct sum; the result is within eps of the target mix"""
    weights = approximate_weights(targets, eps, max_den)
    return rational_combination(reps, weights, max_dim), weights
