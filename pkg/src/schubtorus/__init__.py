"""Torus actions on matrix Schubert and Kazhdan-Lusztig varieties.

The complexity of a torus action is the dimension of the variety minus the
dimension of its weight cone.  Everything here is exact integer or rational
arithmetic on permutations, cell diagrams and directed graphs.
"""

from .census import CensusResult, THEOREMS, kl_census, msv_census, verify
from .cone import Cone, cone_dim, exact_rank, extremal_generators, in_cone
from .diagram import (CellSet, L, Lprime, dominant, essential_set, opposite_rothe, rothe,
                      sw_region)
from .digraph import Bar, Digraph, edge_cone_dim, incidence_rank, indecomposable_edges
from .errors import *  # noqa: F401,F403
from .kl import (KlReport, analyze_kl, classify_vistransp, classify_visid, extremal_weights,
                 neighborhood_complexity)
from .msv import MsvReport, analyze_msv, is_toric_by_hooks
from .perm import Permutation, bruhat_leq, length, parse_permutation

__version__ = "0.1.0"
