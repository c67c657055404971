from tensors.types import Correlation, MarginalPair, ValidityReport
from tensors.predicates import (
    averaged_marginals,
    is_nonsignalling,
    is_symmetric,
    is_synchronous,
    marginals,
    relabel_outputs,
    validate_correlation,
)
from tensors.arithmetic import (
    convex_combine,
    deterministic_correlation,
    pr_box,
    product_correlation,
    random_correlation,
    random_nonsignalling,
    sup_distance,
    uniform_correlation,
)
