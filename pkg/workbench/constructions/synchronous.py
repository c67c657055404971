from typing import Sequence

import numpy as np

from operators.evaluation import trace_correlation
from operators.types import OperatorMeasure
from tensors.arithmetic import check_weights
from tensors.types import Correlation
from utils.errors import MalformedInput, ShapeMismatch, WeightSumError


def synchronous_from_blocks(block_pvms: Sequence[Sequence[OperatorMeasure]], trace_weights: Sequence[float]) -> Correlation:
    """
    p(i,j|x,y) = sum_k (t_k / n_k) Tr(E^(k)_{x,i} E^(k)_{y,j})\n
    Each block carries one list of measures used by both parties; the weights are the traces of the
    block units and may be irrational
    """
    if len(block_pvms) == 0:
        raise MalformedInput("synchronous synthesis needs at least one block")
    if len(block_pvms) != len(trace_weights):
        raise ShapeMismatch((len(block_pvms),), (len(trace_weights),))
    coefficients = check_weights(trace_weights)
    if np.any(coefficients <= 0):
        raise WeightSumError(sum(trace_weights))
    stacks = [np.stack([measure.elements for measure in block]) for block in block_pvms]
    reference = stacks[0].shape[:2]
    for stack in stacks[1:]:
        if stack.shape[:2] != reference:
            raise ShapeMismatch(reference, stack.shape[:2])
    parts = [trace_correlation(stack, stack).values for stack in stacks]
    values = np.tensordot(coefficients, np.stack(parts), axes=1)
    return Correlation(reference[0], reference[0], reference[1], values)
