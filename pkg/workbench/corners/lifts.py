from typing import Sequence

import numpy as np

from constructions.blocks import rational_combination
from constructions.weights import RationalWeight
from log_engine.log import logger
from maxent import settings
from membership.polytope import is_local
from membership.vertices import response_functions
from operators.types import MaxEntRep
from tensors.predicates import averaged_marginals, is_nonsignalling
from tensors.types import Correlation
from utils.errors import NonLocalCorrelation, ProjectionRequired, SignallingCorrelation
from utils.types import MeasureKind


def lift_max_ent(rep: MaxEntRep) -> MaxEntRep:
    """Both parties get Alice's measures followed by Bob's, so the lifted correlation is synchronous"""
    if rep.kind != MeasureKind.PVM:
        raise ProjectionRequired("lift_max_ent")
    measures = rep.alice + rep.bob
    return MaxEntRep(measures, measures)


def _diagonal_block(marginal: np.ndarray) -> np.ndarray:
    """delta_ij q(i|x) when x == y, q(i|x) q(j|y) otherwise"""
    n, m = marginal.shape
    block = np.einsum("xi,yj->xyij", marginal, marginal)
    for x in range(n):
        block[x, x] = np.diag(marginal[x])
    return block


def lift_nonsignalling(p: Correlation, tol: float = None) -> Correlation:
    """
    Symmetric synchronous nonsignalling correlation on n_a + n_b inputs whose corner is p\n
    Inputs are ordered Alice then Bob; the blocks are [[p1, p], [p transposed, p2]] with p1 and p2 built
    from the averaged marginals
    """
    tol = settings.FLOAT_TOL if tol is None else tol
    ok, defect = is_nonsignalling(p, tol)
    if not ok:
        logger.error(f"Refusing to lift a correlation with signalling defect {defect!r}")
        raise SignallingCorrelation(defect, tol)
    alice, bob = averaged_marginals(p)
    n = p.n_a + p.n_b
    values = np.zeros((n, n, p.m, p.m))
    values[:p.n_a, :p.n_a] = _diagonal_block(alice)
    values[:p.n_a, p.n_a:] = p.values
    values[p.n_a:, :p.n_a] = p.values.transpose(1, 0, 3, 2)
    values[p.n_a:, p.n_a:] = _diagonal_block(bob)
    return Correlation(n, n, p.m, values)


def lift_local(p: Correlation, tol: float = None, max_vertices: int = None) -> Correlation:
    """
    Local synchronous correlation whose corner is p\n
    Each deterministic vertex of a convex decomposition of p lifts to a deterministic synchronous
    correlation; the lifts are recombined with the same weights
    """
    verdict = is_local(p, tol, max_vertices)
    if not verdict.inside:
        raise NonLocalCorrelation(verdict.status)
    responses = response_functions(p.n_a, p.n_b, p.m)
    n = p.n_a + p.n_b
    values = np.zeros((n, n, p.m, p.m))
    for index, weight in verdict.weights:
        alice, bob = responses[index]
        outputs = np.array(alice + bob)
        values[np.arange(n)[:, None], np.arange(n)[None, :], outputs[:, None], outputs[None, :]] += weight
    return Correlation(n, n, p.m, values)


def lift_combination(reps: Sequence[MaxEntRep], weights: Sequence[RationalWeight], max_dim: int = None) -> MaxEntRep:
    """Direct sum of the lifted reps; the corner of its correlation is the weighted mix of the inputs"""
    return rational_combination([lift_max_ent(rep) for rep in reps], weights, max_dim)
