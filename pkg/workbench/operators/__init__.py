from operators.types import MaxEntRep, OperatorMeasure, SchmidtForm, StateRep
from operators.measures import (
    deterministic_rep,
    diagonal_projections,
    haar_unitary,
    random_max_ent_rep,
    random_pvm,
    rank_profile,
    validate_measure,
    validate_rep,
)
from operators.evaluation import eval_max_ent, eval_state_rep, trace_correlation
from operators.schmidt import canonicalize, is_maximally_entangled, maximally_entangled_state, schmidt_decompose
