import numpy as np
from scipy.optimize import linprog, nnls

from log_engine.log import logger
from maxent import settings
from membership.types import BellFunctional, MembershipVerdict
from membership.vertices import vertex_matrix
from tensors.types import Correlation
from utils.types import VerdictStatus


LP_OPTIONS = {"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10}
WEIGHT_FLOOR = 1e-14


def _convex_weights(vertices: np.ndarray, target: np.ndarray):
    """Feasibility of target = sum_v w_v vertex_v with w on the simplex; weights are None unless HiGHS solved it"""
    count = vertices.shape[0]
    a_eq = np.vstack([vertices.T, np.ones((1, count))])
    b_eq = np.append(target, 1.0)
    result = linprog(np.zeros(count), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs", options=LP_OPTIONS)
    logger.debug(f"Feasibility LP over {count} vertices: status {result.status}, {result.message}")
    if result.status != 0:
        return None, result.status
    weights = np.clip(result.x, 0.0, None)
    support = np.flatnonzero(weights > 0)
    # polish on the support, the basis of a simplex solution has at most len(b_eq) columns
    polished, _ = nnls(a_eq[:, support], b_eq)
    polished[polished < WEIGHT_FLOOR] = 0.0
    weights = np.zeros(count)
    weights[support] = polished
    return weights / weights.sum(), result.status


def _separating_functional(vertices: np.ndarray, target: np.ndarray):
    """max f.p - c subject to f.v <= c on every vertex and |f| <= 1, variables (f, c)"""
    count, size = vertices.shape
    objective = np.append(-target, 1.0)
    a_ub = np.hstack([vertices, -np.ones((count, 1))])
    bounds = [(-1.0, 1.0)] * size + [(None, None)]
    result = linprog(objective, A_ub=a_ub, b_ub=np.zeros(count), bounds=bounds, method="highs", options=LP_OPTIONS)
    logger.debug(f"Separation LP: status {result.status}, {result.message}")
    if result.status != 0:
        return None
    return result.x[:size]


def is_local(p: Correlation, tol: float = None, max_vertices: int = None) -> MembershipVerdict:
    """
    Membership of p in the convex hull of the deterministic correlations\n
    Both answers are checked independently of the solver: inside weights must rebuild p within tol and an
    outside functional must beat its own maximum over every vertex by SEPARATION_MARGIN. Anything else is
    reported as indeterminate
    """
    tol = settings.MEMBERSHIP_TOL if tol is None else tol
    vertices = vertex_matrix(p.n_a, p.n_b, p.m, max_vertices)
    target = p.values.ravel()

    weights, status = _convex_weights(vertices, target)
    if status not in (0, 2):
        message = f"feasibility LP stopped with status {status}"
        logger.warning(f"Indeterminate membership: {message}")
        return MembershipVerdict(VerdictStatus.Indeterminate, messages=[message])
    if weights is not None:
        residual = float(np.abs(vertices.T @ weights - target).max())
        if residual <= tol:
            pairs = [(int(v), float(weights[v])) for v in np.flatnonzero(weights > 0)]
            return MembershipVerdict(VerdictStatus.Inside, weights=pairs, residual=residual)
        logger.info(f"Convex weights rebuild p only within {residual!r}, looking for a separating functional")

    functional = _separating_functional(vertices, target)
    if functional is None:
        message = "separation LP did not converge"
        logger.warning(f"Indeterminate membership: {message}")
        return MembershipVerdict(VerdictStatus.Indeterminate, messages=[message])
    classical_bound = float((vertices @ functional).max())
    achieved = float(functional @ target)
    if achieved > classical_bound + settings.SEPARATION_MARGIN:
        certificate = BellFunctional(functional.reshape(p.shape))
        return MembershipVerdict(VerdictStatus.Outside, certificate=certificate,
                                 classical_bound=classical_bound, achieved_value=achieved)
    message = f"no certified answer, separation gap {achieved - classical_bound!r}"
    logger.warning(f"Indeterminate membership: {message}")
    return MembershipVerdict(VerdictStatus.Indeterminate, messages=[message])
