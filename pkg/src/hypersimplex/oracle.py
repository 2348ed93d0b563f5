"""Brute-force reference implementations for small hypersimplex graphs.

Everything here works from the definition: enumerate the 0/1 words with k
ones, join words at Hamming distance 2, then search. No closed-form formula
from the rest of the package is used, so agreement between the two is
evidence rather than tautology.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core_graph import GraphParams, Vertex
from .errors import SizeCapError

ENUMERATION_CAP = 2**20
EDGE_CAP = 4096
EXPANSION_CAP = 24
SPECTRAL_CAP = 512
CLIQUE_CAP = 64
HAMILTON_CAP = 12
CONNECTIVITY_CAP = 64


@dataclass(frozen=True)
class SmallGraph:
    params: GraphParams
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]
    index: dict[Vertex, int] = field(repr=False, compare=False)
    adjacency: tuple[int, ...] = field(repr=False, compare=False)  # bitset of neighbour indices

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def neighbours(self, i: int) -> list[int]:
        a, out = self.adjacency[i], []
        while a:
            low = a & -a
            out.append(low.bit_length() - 1)
            a ^= low
        return out

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeCapError(f"{what} is capped at {cap} vertices, graph has {n}")


def build_small_graph(p: GraphParams, with_edges: bool = True) -> SmallGraph:
    d, k = p.d, p.k
    n = math.comb(d, k)
    _check_cap(n, ENUMERATION_CAP, "vertex enumeration")
    if with_edges:
        _check_cap(n, EDGE_CAP, "edge construction")
    words = sorted(sum(1 << (d - 1 - i) for i in c) for c in combinations(range(d), k))
    vertices = tuple(Vertex(w, p) for w in words)
    index = {v: i for i, v in enumerate(vertices)}

    edges: list[tuple[int, int]] = []
    adjacency = [0] * n
    if with_edges:
        arr = np.array(words, dtype=np.uint64)
        for i in range(n - 1):
            hamming = np.bitwise_count(arr[i + 1:] ^ arr[i])
            for j in (np.flatnonzero(hamming == 2) + i + 1).tolist():
                edges.append((i, j))
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return SmallGraph(p, vertices, tuple(edges), index, tuple(adjacency))


def adjacency_array(g: SmallGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    return a


def bfs_distances(g: SmallGraph, source: Vertex) -> list[int]:
    """Graph distance from ``source`` to every vertex, in vertex order (-1 if unreachable)."""
    s = g.index[source]
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.neighbours(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: SmallGraph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in g.vertices]


def graph_diameter(g: SmallGraph) -> int:
    return max(max(row) for row in all_pairs_distances(g))


def intersection_table(g: SmallGraph) -> dict[tuple[int, int], set[int]]:
    """For each (i, j): the set of observed counts |{z ~ y : dist(x, z) = j}| over pairs at distance i.

    The graph is distance-regular exactly when every set is a singleton.
    """
    dist = all_pairs_distances(g)
    diam = max(max(row) for row in dist)
    table: dict[tuple[int, int], set[int]] = {}
    for x in range(g.n):
        for y in range(g.n):
            i = dist[x][y]
            counts = [0] * (diam + 1)
            for z in g.neighbours(y):
                counts[dist[x][z]] += 1
            for j, c in enumerate(counts):
                table.setdefault((i, j), set()).add(c)
    return table


def is_distance_regular(g: SmallGraph) -> bool:
    if len(set(g.degrees())) != 1:
        return False
    return all(len(s) == 1 for s in intersection_table(g).values())


def is_polytope_edge(g: SmallGraph, i: int, j: int, tol: float = 1e-9) -> bool:
    """Decide whether conv{x_i, x_j} is an edge of the hull of all vertices.

    The segment is an edge iff its midpoint admits no convex representation
    putting positive weight on any other vertex; checked by maximizing that
    weight with a small LP.
    """
    from scipy.optimize import linprog

    if i == j:
        return False
    pts = np.array([v.coordinates() for v in g.vertices], dtype=float)
    mid = (pts[i] + pts[j]) / 2
    others = np.ones(g.n)
    others[[i, j]] = 0
    a_eq = np.vstack([pts.T, np.ones(g.n)])
    b_eq = np.append(mid, 1.0)
    res = linprog(-others, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status != 0:
        raise RuntimeError(f"LP failed: {res.message}")
    return -res.fun <= tol


@dataclass(frozen=True)
class ExpansionReport:
    value: Fraction
    witness: tuple[Vertex, ...]
    sets_examined: int

    def cut_size(self) -> int:
        return int(self.value * len(self.witness))


def _lex_least(candidates: np.ndarray) -> int:
    """Mask whose sorted index tuple is lexicographically least (a prefix beats its extensions)."""
    prefix = 0
    cands = candidates.astype(np.int64)
    while True:
        if np.any(cands == prefix):
            return prefix
        rest = cands & ~prefix
        low = rest & -rest
        nxt = low.min()
        cands = cands[low == nxt]
        prefix |= int(nxt)


def exact_expansion(g: SmallGraph) -> ExpansionReport:
    """Minimum of cut(U)/|U| over nonempty U with |U| <= |V|/2, by full enumeration."""
    n = g.n
    if n > EXPANSION_CAP:
        raise SizeCapError(
            f"exact expansion is capped at {EXPANSION_CAP} vertices (graph has {n}); "
            "use sweep_expansion_upper_bound for an upper estimate"
        )
    if n < 2:
        raise ValueError("expansion needs at least two vertices")
    deg = g.degrees()
    # cut[m] for every vertex subset m, built one top bit at a time
    cut = np.zeros(1 << n, dtype=np.int32)
    for i in range(n):
        lo = np.arange(1 << i, dtype=np.uint32)
        inside = np.bitwise_count(lo & np.uint32(g.adjacency[i])).astype(np.int32)
        cut[1 << i: 1 << (i + 1)] = cut[: 1 << i] + deg[i] - 2 * inside
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.uint32))
    half = n // 2

    best: Fraction | None = None
    examined = 0
    for s in range(1, half + 1):
        sel = sizes == s
        examined += int(np.count_nonzero(sel))
        ratio = Fraction(int(cut[sel].min()), s)
        if best is None or ratio < best:
            best = ratio
    assert best is not None
    masks = np.flatnonzero(
        (sizes >= 1) & (sizes <= half)
        & (cut.astype(np.int64) * best.denominator == sizes.astype(np.int64) * best.numerator)
    )
    mask = _lex_least(masks)
    witness = tuple(g.vertices[i] for i in range(n) if mask >> i & 1)
    return ExpansionReport(best, witness, examined)


def sweep_expansion_upper_bound(g: SmallGraph) -> Fraction:
    """Best prefix cut when vertices are ordered along a second adjacency eigenvector."""
    n = g.n
    _check_cap(n, SPECTRAL_CAP, "spectral sweep")
    a = adjacency_array(g)
    _, vecs = np.linalg.eigh(a.astype(float))
    order = np.argsort(vecs[:, -2], kind="stable")
    deg = a.sum(axis=1)
    inside = np.zeros(n, dtype=bool)
    cut = 0
    best: Fraction | None = None
    for s, v in enumerate(order[:-1], start=1):
        cut += int(deg[v]) - 2 * int(a[v, inside].sum())
        inside[v] = True
        ratio = Fraction(cut, min(s, n - s))
        if best is None or ratio < best:
            best = ratio
    assert best is not None
    return best


def max_clique(g: SmallGraph, cap: int = CLIQUE_CAP) -> int:
    """Exact clique number by branch and bound over bitsets, highest degree first.

    Bitsets are Python ints, so ``cap`` may be raised for a one-off larger run.
    """
    n = g.n
    _check_cap(n, cap, "max clique")
    order = sorted(range(n), key=lambda v: (-g.adjacency[v].bit_count(), v))
    pos = {v: p for p, v in enumerate(order)}
    adj = [0] * n
    for v in range(n):
        for w in g.neighbours(v):
            adj[pos[v]] |= 1 << pos[w]

    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & adj[v])
            cand ^= low

    expand(0, (1 << n) - 1)
    return best


def hamilton_connected_check(g: SmallGraph) -> bool:
    """True iff every pair of distinct vertices is joined by a Hamiltonian path.

    For each start vertex, track which endpoints are reachable by a simple path
    covering each visited set (bitmask search, exhaustive).
    """
    n = g.n
    _check_cap(n, HAMILTON_CAP, "Hamilton-connectivity search")
    full = (1 << n) - 1
    adj = g.adjacency
    for s in range(n):
        ends = [0] * (1 << n)
        ends[1 << s] = 1 << s
        for mask in range(1 << n):
            e = ends[mask]
            while e:
                low = e & -e
                v = low.bit_length() - 1
                step = adj[v] & ~mask
                while step:
                    w_bit = step & -step
                    ends[mask | w_bit] |= w_bit
                    step ^= w_bit
                e ^= low
        if ends[full] | (1 << s) != full:
            return False
    return True


def _disjoint_paths(adj: list[list[int]], n: int, u: int, v: int, limit: int) -> int:
    """Internally vertex-disjoint u-v paths, counted up to ``limit`` (unit-capacity max-flow)."""
    # node 2x is x_in, 2x+1 is x_out; x_in -> x_out carries capacity 1
    graph: list[list[int]] = [[] for _ in range(2 * n)]
    to: list[int] = []
    cap: list[int] = []

    def arc(a: int, b: int, c: int) -> None:
        graph[a].append(len(to)); to.append(b); cap.append(c)
        graph[b].append(len(to)); to.append(a); cap.append(0)

    for x in range(n):
        if x not in (u, v):
            arc(2 * x, 2 * x + 1, 1)
    for x in range(n):
        for y in adj[x]:
            if x == u and y == v or x == v and y == u:
                continue
            arc(2 * x + 1, 2 * y, 1)

    source, sink = 2 * u + 1, 2 * v
    flow = 1 if v in adj[u] else 0
    while flow < limit:
        parent = {source: -1}
        stack = [source]
        while stack and sink not in parent:
            a = stack.pop()
            for e in graph[a]:
                b = to[e]
                if cap[e] > 0 and b not in parent:
                    parent[b] = e
                    stack.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            e = parent[b]
            cap[e] -= 1
            cap[e ^ 1] += 1
            b = to[e ^ 1]
        flow += 1
    return flow


def vertex_connectivity_at_least(g: SmallGraph, t: int) -> bool:
    """True iff every vertex pair is joined by at least t internally disjoint paths."""
    n = g.n
    _check_cap(n, CONNECTIVITY_CAP, "vertex connectivity")
    if t <= 0:
        return True
    adj = [g.neighbours(i) for i in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if _disjoint_paths(adj, n, u, v, t) < t:
                return False
    return True
