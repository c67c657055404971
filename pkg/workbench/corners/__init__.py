from corners.projection import block_view, corner
from corners.lifts import lift_combination, lift_local, lift_max_ent, lift_nonsignalling
