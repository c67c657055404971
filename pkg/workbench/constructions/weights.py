from fractions import Fraction
from math import floor
from typing import List, Sequence

import numpy as np

from log_engine.log import logger
from maxent import settings
from utils import parse_fraction
from utils.errors import InfeasibleDenominator, MalformedInput, WeightSumError


RationalWeight = Fraction


def check_rational_weights(weights: Sequence) -> List[RationalWeight]:
    """Exact weights, nonnegative and summing to exactly 1"""
    weights = [parse_fraction(w) for w in weights]
    if len(weights) == 0 or any(w < 0 for w in weights) or sum(weights) != 1:
        raise WeightSumError(sum(weights) if weights else 0)
    return weights


def _repair_largest(rounded: List[Fraction]) -> List[Fraction]:
    largest = max(range(len(rounded)), key=lambda k: rounded[k])
    rounded[largest] = 1 - sum(w for k, w in enumerate(rounded) if k != largest)
    return rounded


def needed_denominator(count: int, eps: float) -> int:
    """A common denominator q with q > count * (count - 1) / (2 eps) always meets the per-weight bound eps / count"""
    return floor(count * max(count - 1, 1) / (2 * eps)) + 1


def approximate_weights(targets: Sequence[float], eps: float, max_den: int = None) -> List[RationalWeight]:
    """
    Rationals r_k with sum exactly 1 and |t_k - r_k| < eps / N\n
    Every weight is rounded onto the grid 1/q for the smallest q that works, then the largest weight
    absorbs the rounding so the sum is restored exactly
    """
    max_den = settings.MAX_DEN if max_den is None else max_den
    targets = np.asarray(targets, dtype=float)
    if targets.size == 0 or np.any(targets < 0) or abs(float(targets.sum()) - 1.0) > settings.EXACT_TOL:
        raise WeightSumError(float(targets.sum()) if targets.size else 0)
    if eps <= 0:
        raise MalformedInput(f"eps must be positive, received {eps!r}")
    count = targets.size
    bound = eps / count

    exact = [Fraction(float(t)).limit_denominator(max_den) for t in targets]
    if sum(exact) == 1 and all(float(r) == t for r, t in zip(exact, targets)):
        return exact

    for q in range(1, max_den + 1):
        rounded = _repair_largest([Fraction(round(t * q), q) for t in targets])
        if any(r < 0 for r in rounded):
            continue
        if all(abs(float(r) - t) < bound for r, t in zip(rounded, targets)):
            logger.debug(f"Weights {targets.tolist()} approximated on the grid 1/{q}")
            return rounded
    raise InfeasibleDenominator(max_den, needed_denominator(count, eps))
