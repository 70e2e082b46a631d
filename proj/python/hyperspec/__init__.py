"""Spectral bounds for coloring numbers of oriented hypergraphs."""

from ._core import (
    ConvergenceError,
    DomainError,
    Hypergraph,
    HyperspecError,
    ModeMismatch,
    ParseError,
    SpecError,
    ValidationError,
    adjacency,
    bound_d_improper,
    bound_d_proper,
    bound_edge,
    bound_general,
    bound_q_tailored,
    brute_force_chromatic,
    check_sharpness,
    chromatic,
    closed_form_spectrum,
    edge_eigenvalues,
    edge_spectrum,
    evaluate,
    expand_corpus,
    generate,
    incidence,
    is_valid_coloring,
    kirchhoff,
    parse,
    parse_mode,
    serialize,
    vertex_eigenvalues,
    vertex_spectrum,
)

__version__ = "0.1.0"
