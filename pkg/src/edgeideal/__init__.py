"""Edge ideals of graphs: combinatorial invariants, an exact Betti-number
oracle, vertex decomposability, Alexander duality, and a harness that checks
regularity / projective dimension / depth formulas against the oracle."""

__version__ = "0.1.0"

from .complexes import (  # noqa: E402
    BettiTable,
    SimplicialComplex,
    betti_table,
    depth,
    hochster_betti_table,
    independence_complex,
    krull_dimension,
    projective_dimension,
    reduced_homology_ranks,
    regularity,
    stanley_reisner_complex,
)
from .decomposability import (  # noqa: E402
    DecompositionCertificate,
    dominated_neighbor,
    find_induced_c5,
    is_bipartite,
    is_c5_free,
    is_chordal,
    is_shedding_vertex,
    is_vertex_decomposable,
)
from .dual import (  # noqa: E402
    alexander_dual_of_edge_ideal,
    decomposition_identity_check,
    primary_decomposition_check,
    terai_check,
)
from .errors import DomainError, EdgeIdealError, InputError, ParseError, ResourceError  # noqa: E402
from .graph import Graph, parse_edge_list, read_graph  # noqa: E402
from .ideals import SquarefreeMonomialIdeal, ideal_of_graph  # noqa: E402
from .invariants import (  # noqa: E402
    bight,
    c_number,
    d_number,
    d_prime_number,
    domination_number,
    edgewise_domination_number,
    is_unmixed,
    min_max_maximal_independent,
    three_disjoint,
)
from .verify import VerificationReport, search_d_question, verify_theorems  # noqa: E402
