from membership.types import BellFunctional, MembershipVerdict
from membership.vertices import enumerate_deterministic, response_functions, vertex_count, vertex_matrix
from membership.polytope import is_local
from membership.games import bell_value, chsh_functional, chsh_optimal_rep, classical_value, game_functional
