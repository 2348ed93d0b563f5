"""Combinatorics, spectra and random-walk sampling on the hypersimplex graph G(d, k).

G(d, k) has the 0/1 vectors of length d with k ones as vertices; two are
adjacent when they share k-1 ones (the Johnson graph J(d, k)).
"""

from .core_graph import (
    GraphParams,
    IndexPermutation,
    Vertex,
    apply_permutation,
    complement_params,
    degree,
    diameter,
    distance,
    edge_count,
    inner_product,
    is_adjacent,
    iter_vertices,
    neighbors,
    transitive_automorphism,
    vertex_count,
)
from .errors import (
    ArithmeticOverflowError,
    ParameterMismatchError,
    RegimeError,
    SamplerError,
    SizeCapError,
    UndersampledError,
)

__all__ = [
    "ArithmeticOverflowError",
    "GraphParams",
    "IndexPermutation",
    "ParameterMismatchError",
    "RegimeError",
    "SamplerError",
    "SizeCapError",
    "UndersampledError",
    "Vertex",
    "apply_permutation",
    "complement_params",
    "degree",
    "diameter",
    "distance",
    "edge_count",
    "inner_product",
    "is_adjacent",
    "iter_vertices",
    "neighbors",
    "transitive_automorphism",
    "vertex_count",
]
