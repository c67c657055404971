from dilation.spectra import (
    check_pairwise_commuting,
    commutator_norm,
    joint_eigenvalues,
    rational_spectrum,
    simultaneous_diagonalize,
)
from dilation.dilate import (
    RationalFamily,
    consecutive_projections,
    dilate_commuting_rational,
    dilation_factors,
    eval_almost_max_ent,
    fourier_rotated,
)
from dilation.rounding import approximate_by_max_ent, needed_spectrum_denominator, round_to_rational_spectrum
