"""Cliques and the self-similar decomposition of G(d, k)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core_graph import (
    GraphParams,
    Vertex,
    coordinate_mask,
    iter_vertices,
    neighbors,
)
from .errors import RegimeError


def canonical_clique(p: GraphParams) -> list[Vertex]:
    """The d-k+1 vertices whose first k-1 coordinates are one."""
    if not (2 <= p.k and p.in_regime):
        raise RegimeError(f"canonical_clique needs 2 <= k <= d/2, got d={p.d}, k={p.k}")
    prefix = sum(coordinate_mask(p.d, i) for i in range(1, p.k))
    return sorted(Vertex(prefix | coordinate_mask(p.d, i), p) for i in range(p.k, p.d + 1))


def clique_number(p: GraphParams) -> int:
    if p.k == 1:
        return p.d
    if not p.in_regime:
        raise RegimeError(
            f"clique_number needs k <= d/2, got d={p.d}, k={p.k}; "
            f"query G({p.d},{p.d - p.k}) via complement_params()"
        )
    return p.d - p.k + 1


def edge_count_or_zero(d: int, k: int) -> int:
    """Edge count of G(d, k), extended by 0 to the single-vertex cases k = 0 and k = d."""
    if k <= 0 or k >= d:
        return 0
    return math.comb(d, k) * k * (d - k) // 2


def linking_edge_formula(p: GraphParams) -> int:
    """(d-1)! / ((k-1)! (d-k-1)!), the count of edges between the two parts."""
    d, k = p.d, p.k
    return math.factorial(d - 1) // (math.factorial(k - 1) * math.factorial(d - k - 1))


def drop_coordinate(v: Vertex, pivot: int) -> tuple[int, int, int]:
    """Remove coordinate ``pivot``; returns (bits, d-1, ones) of the shortened word."""
    d = v.params.d
    shift = d - pivot
    high = v.bits >> (shift + 1)
    low = v.bits & ((1 << shift) - 1)
    bits = (high << shift) | low
    return bits, d - 1, bits.bit_count()


@dataclass(frozen=True)
class Part:
    """One side of a decomposition: vertices with a fixed pivot value.

    ``relabel`` maps each vertex to its image in G(d-1, k'); it is empty when
    k' is 0 or d-1 (a single vertex, which is not a valid G).
    """

    d: int
    k: int
    vertices: tuple[Vertex, ...]
    relabel: dict[Vertex, Vertex] = field(repr=False, compare=False)

    @property
    def degenerate(self) -> bool:
        return self.k <= 0 or self.k >= self.d

    @property
    def target(self) -> GraphParams | None:
        return None if self.degenerate else GraphParams(self.d, self.k)


@dataclass(frozen=True)
class Decomposition:
    params: GraphParams
    pivot: int
    ones_part: Part
    zeros_part: Part
    linking_edges: tuple[tuple[Vertex, Vertex], ...]

    def edge_identity(self) -> tuple[int, int, int, int]:
        """(total, ones-part edges, zeros-part edges, linking) from direct counts."""
        total = edge_count_or_zero(self.params.d, self.params.k)
        ones = _induced_edges(self.ones_part.vertices)
        zeros = _induced_edges(self.zeros_part.vertices)
        return total, ones, zeros, len(self.linking_edges)

    def identity_holds(self) -> bool:
        total, ones, zeros, links = self.edge_identity()
        return total == ones + zeros + links


def _induced_edges(vertices) -> int:
    vs = set(vertices)
    return sum(1 for v in vs for w in neighbors(v) if w in vs) // 2


def _make_part(vertices: list[Vertex], pivot: int) -> Part:
    p = vertices[0].params
    k_sub = p.k - vertices[0].coordinate(pivot)
    part = Part(p.d - 1, k_sub, tuple(vertices), {})
    if not part.degenerate:
        target = part.target
        for v in vertices:
            bits, _, _ = drop_coordinate(v, pivot)
            part.relabel[v] = Vertex(bits, target)
    return part


def decompose(p: GraphParams, pivot: int = 1) -> Decomposition:
    """Split G(d, k) on coordinate ``pivot`` into copies of G(d-1, k-1) and G(d-1, k)."""
    if not isinstance(pivot, int) or not 1 <= pivot <= p.d:
        raise ValueError(f"pivot must be a coordinate in 1..{p.d}, got {pivot!r}")
    ones, zeros = [], []
    for v in iter_vertices(p):
        (ones if v.coordinate(pivot) else zeros).append(v)
    links = tuple(
        (v, w) for v in ones for w in neighbors(v) if not w.coordinate(pivot)
    )
    return Decomposition(p, pivot, _make_part(ones, pivot), _make_part(zeros, pivot), links)


@dataclass
class DecompositionNode:
    d: int
    k: int
    pivot: int | None = None
    linking_edge_count: int | None = None
    children: list["DecompositionNode"] = field(default_factory=list)

    @property
    def vertex_count(self) -> int:
        return math.comb(self.d, self.k)

    @property
    def edge_count(self) -> int:
        return edge_count_or_zero(self.d, self.k)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def identity_holds(self) -> bool:
        """Edges of this node equal children's edges plus the linking edges."""
        if self.is_leaf:
            return True
        return self.edge_count == sum(c.edge_count for c in self.children) + self.linking_edge_count

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "pivot": self.pivot,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "linking_edge_count": self.linking_edge_count,
            "children": [c.to_dict() for c in self.children],
        }


def _is_terminal(d: int, k: int) -> bool:
    # single vertex (k in {0, d}) or complete graph (k in {1, d-1})
    return min(k, d - k) <= 1


def recursive_decomposition(p: GraphParams, depth: int) -> DecompositionNode:
    """Decompose on coordinate 1 repeatedly until parts are complete graphs or points."""
    if depth < 1:
        raise ValueError("depth must be at least 1")

    def build(d: int, k: int, remaining: int) -> DecompositionNode:
        node = DecompositionNode(d, k)
        if remaining == 0 or _is_terminal(d, k):
            return node
        dec = decompose(GraphParams(d, k), 1)
        node.pivot = 1
        node.linking_edge_count = len(dec.linking_edges)
        node.children = [
            build(d - 1, k - 1, remaining - 1),
            build(d - 1, k, remaining - 1),
        ]
        return node

    root = DecompositionNode(p.d, p.k)
    dec = decompose(p, 1)
    root.pivot = 1
    root.linking_edge_count = len(dec.linking_edges)
    root.children = [build(p.d - 1, p.k - 1, depth - 1), build(p.d - 1, p.k, depth - 1)]
    return root
