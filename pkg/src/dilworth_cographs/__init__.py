"""Exact spectral and vicinal-preorder invariants of cographs.

Submodules: :mod:`.graph` (graph values and codecs), :mod:`.generators`
(named families), :mod:`.cograph` (recognition and cotrees), :mod:`.vicinal`
(preorder, Dilworth number, threshold structure), :mod:`.linalg` (exact
ranks, characteristic polynomials, multiplicities), :mod:`.harness`
(theorem checks) and :mod:`.search` (induced subgraphs, enumeration,
counterexample search).
"""

from .cograph import Cotree, NotACograph, build_cotree, cotree_to_graph, find_induced_p4, is_cograph
from .graph import (
    Graph,
    complement,
    connected_components,
    disjoint_union,
    from_edge_list,
    from_graph6,
    from_json,
    induced_subgraph,
    join,
    neighborhood,
    to_graph6,
    to_json,
)
from .linalg import (
    IntPolynomial,
    SpectralProfile,
    char_poly,
    integer_eigenvalue_multiplicity,
    multiplicity_profile,
    quotient_matrix,
    rank,
    square_free_decomposition,
    verify_eigenvector,
)
from .vicinal import (
    DilworthReport,
    ThresholdStructure,
    dilworth_number,
    is_threshold,
    threshold_partition,
    threshold_structure,
    vicinal_leq,
)

__version__ = "0.1.0"
