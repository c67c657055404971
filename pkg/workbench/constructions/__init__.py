from constructions.weights import RationalWeight, approximate_weights, check_rational_weights, needed_denominator
from constructions.blocks import (
    BlockPlan,
    approximate_combination,
    embed_factorial,
    embed_to_factorial,
    plan_blocks,
    rational_combination,
    tower_step,
)
from constructions.synchronous import synchronous_from_blocks
