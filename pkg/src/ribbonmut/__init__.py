"""Ribbon graphs as arrow presentations, their delta-matroids, and mutation."""

from .chords import (
    SearchBudgetExceeded,
    Share,
    SignedWord,
    bouquet_to_word,
    find_shares,
    intersection_graph,
    mutants_of_ribbon_graph,
    mutants_of_word,
    mutation_equivalent,
    mutation_orbit,
    word_to_bouquet,
)
from .duality import (
    cycle_matroid_of,
    delta_matroid_of,
    partial_dual,
    partial_petrial,
    spanning_quasi_trees,
)
from .graphs import SimpleGraph, graph_isomorphism
from .harness import (
    PopulationSpec,
    enumerate_bouquets,
    enumerate_ribbon_graphs,
    find_witness,
    replay_certificate,
    run_suite,
    two_isomorphism_decide,
)
from .polynomials import MultiPoly, bollobas_riordan, invariance_check, tutte
from .report import SuiteReport
from .ribbon import (
    ArrowEnd,
    ArrowPresentation,
    ParseError,
    TopoStats,
    canonical_form,
    disjoint_union,
    isomorphic,
    orientability_and_genus,
    parse,
    serialize,
    subgraph_stats,
    vertex_cuts,
    vertex_join,
)
from .setsystem import (
    Gf2Matrix,
    SetSystem,
    classify,
    direct_sum,
    from_gf2_matrix,
    fundamental_graph,
    isomorphic_dm,
    loop_complement,
    reconstruct_binary,
    symmetric_exchange_holds,
    twist,
)

__version__ = "0.1.0"


__all__ = [
    "ArrowEnd",
    "ArrowPresentation",
    "Gf2Matrix",
    "MultiPoly",
    "ParseError",
    "PopulationSpec",
    "SearchBudgetExceeded",
    "SetSystem",
    "Share",
    "SignedWord",
    "SimpleGraph",
    "SuiteReport",
    "TopoStats",
    "bollobas_riordan",
    "bouquet_to_word",
    "canonical_form",
    "classify",
    "cycle_matroid_of",
    "delta_matroid_of",
    "direct_sum",
    "disjoint_union",
    "enumerate_bouquets",
    "enumerate_ribbon_graphs",
    "find_shares",
    "find_witness",
    "from_gf2_matrix",
    "fundamental_graph",
    "graph_isomorphism",
    "intersection_graph",
    "invariance_check",
    "isomorphic",
    "isomorphic_dm",
    "loop_complement",
    "mutants_of_ribbon_graph",
    "mutants_of_word",
    "mutation_equivalent",
    "mutation_orbit",
    "orientability_and_genus",
    "parse",
    "partial_dual",
    "partial_petrial",
    "reconstruct_binary",
    "replay_certificate",
    "run_suite",
    "serialize",
    "spanning_quasi_trees",
    "subgraph_stats",
    "symmetric_exchange_holds",
    "tutte",
    "twist",
    "two_isomorphism_decide",
    "vertex_cuts",
    "vertex_join",
    "word_to_bouquet",
]
