"""Vertices of the hypersimplex graph G(d, k) and its closed-form structure.

A vertex is a 0/1 vector of length ``d`` with exactly ``k`` ones, stored as a
single integer bitmask. Coordinate 1 is the most significant of the ``d`` used
bits, so ``str(v)`` reads left to right exactly like ``"11000"``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .errors import ArithmeticOverflowError, ParameterMismatchError, RegimeError

MAX_D = 64
U64_MAX = 2**64 - 1


@dataclass(frozen=True, order=True)
class GraphParams:
    d: int
    k: int

    def __post_init__(self) -> None:
        if not (isinstance(self.d, int) and isinstance(self.k, int)):
            raise TypeError("d and k must be integers")
        if not 1 <= self.k < self.d:
            raise ValueError(f"need 1 <= k < d, got d={self.d}, k={self.k}")
        if self.d > MAX_D:
            raise ValueError(f"d={self.d} exceeds the {MAX_D}-bit vertex encoding")

    @property
    def in_regime(self) -> bool:
        """True when 1 <= k <= d/2, where distance and spectrum formulas apply."""
        return 2 * self.k <= self.d

    @property
    def regime(self) -> str:
        return "k <= d/2" if self.in_regime else "k > d/2"

    @property
    def mask(self) -> int:
        return (1 << self.d) - 1

    def require_regime(self, what: str) -> None:
        if not self.in_regime:
            raise RegimeError(
                f"{what} needs 1 <= k <= d/2 but got d={self.d}, k={self.k}; "
                f"G({self.d},{self.k}) is isomorphic to G({self.d},{self.d - self.k}), "
                "use complement_params() and query that graph instead"
            )

    def __str__(self) -> str:
        return f"G({self.d},{self.k})"


def coordinate_mask(d: int, i: int) -> int:
    """Mask for 1-based coordinate ``i``."""
    return 1 << (d - i)


@dataclass(frozen=True, order=True)
class Vertex:
    bits: int
    params: GraphParams

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.params.d:
            raise ValueError(f"bit pattern does not fit in d={self.params.d} coordinates")
        if self.bits.bit_count() != self.params.k:
            raise ValueError(
                f"vertex of {self.params} needs exactly {self.params.k} ones, "
                f"got {self.bits.bit_count()}"
            )

    @classmethod
    def parse(cls, text: str, params: GraphParams | None = None) -> "Vertex":
        """Build a vertex from its 0/1 string; infers (d, k) when ``params`` is None."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        if params is None:
            params = GraphParams(len(text), text.count("1"))
        elif len(text) != params.d:
            raise ValueError(f"expected {params.d} coordinates, got {len(text)}")
        return cls(int(text, 2), params)

    @classmethod
    def from_subset(cls, subset, params: GraphParams) -> "Vertex":
        items = set(subset)
        if any(not 1 <= i <= params.d for i in items):
            raise ValueError(f"subset elements must lie in 1..{params.d}")
        bits = 0
        for i in items:
            bits |= coordinate_mask(params.d, i)
        return cls(bits, params)

    @classmethod
    def canonical(cls, params: GraphParams) -> "Vertex":
        """The vertex whose first k coordinates are one."""
        return cls(((1 << params.k) - 1) << (params.d - params.k), params)

    def coordinate(self, i: int) -> int:
        return (self.bits >> (self.params.d - i)) & 1

    def coordinates(self) -> tuple[int, ...]:
        return tuple(self.coordinate(i) for i in range(1, self.params.d + 1))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.params.d}b")


def _same_params(x: Vertex, y: Vertex) -> None:
    if x.params != y.params:
        raise ParameterMismatchError(f"vertices belong to {x.params} and {y.params}")


def _u64(value: int, what: str) -> int:
    if value > U64_MAX:
        raise ArithmeticOverflowError(f"{what} = {value} does not fit in 64 bits")
    return value


def vertex_count(p: GraphParams) -> int:
    return _u64(math.comb(p.d, p.k), "vertex count")


def iter_vertices(p: GraphParams) -> Iterator[Vertex]:
    """All vertices in canonical (ascending bit pattern) order."""
    patterns = sorted(sum(coordinate_mask(p.d, i + 1) for i in c) for c in combinations(range(p.d), p.k))
    for bits in patterns:
        yield Vertex(bits, p)


def inner_product(x: Vertex, y: Vertex) -> int:
    _same_params(x, y)
    return (x.bits & y.bits).bit_count()


def is_adjacent(x: Vertex, y: Vertex) -> bool:
    return inner_product(x, y) == x.params.k - 1


def neighbors(x: Vertex) -> list[Vertex]:
    d = x.params.d
    ones = [1 << b for b in range(d) if x.bits >> b & 1]
    zeros = [1 << b for b in range(d) if not x.bits >> b & 1]
    out = sorted(x.bits ^ a ^ b for a in ones for b in zeros)
    return [Vertex(bits, x.params) for bits in out]


def degree(p: GraphParams) -> int:
    return p.k * (p.d - p.k)


def edge_count(p: GraphParams) -> int:
    # C(d,k) * k(d-k) / 2; the product is always even
    return _u64(math.comb(p.d, p.k) * degree(p) // 2, "edge count")


def distance(x: Vertex, y: Vertex) -> int:
    x.params.require_regime("distance")
    return x.params.k - inner_product(x, y)


def diameter(p: GraphParams) -> int:
    p.require_regime("diameter")
    return p.k


def complement_vertex(v: Vertex) -> Vertex:
    p = v.params
    return Vertex(~v.bits & p.mask, GraphParams(p.d, p.d - p.k))


def complement_params(p: GraphParams) -> tuple[GraphParams, Callable[[Vertex], Vertex]]:
    """The isomorphic graph G(d, d-k) and the coordinate-complement vertex map."""
    return GraphParams(p.d, p.d - p.k), complement_vertex


@dataclass(frozen=True)
class IndexPermutation:
    """A bijection f on coordinates 1..d; ``images[i-1] == f(i)``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, d: int) -> "IndexPermutation":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_transpositions(cls, d: int, pairs) -> "IndexPermutation":
        images = list(range(1, d + 1))
        for a, b in pairs:
            images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
        return cls(tuple(images))

    @property
    def d(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "IndexPermutation") -> "IndexPermutation":
        """self after other."""
        return IndexPermutation(tuple(self(other(i)) for i in range(1, self.d + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.d + 1))


def apply_permutation(f: IndexPermutation, x: Vertex) -> Vertex:
    """Move the bit at coordinate i to coordinate f(i)."""
    d = x.params.d
    if f.d != d:
        raise ParameterMismatchError(f"permutation acts on {f.d} coordinates, vertex has {d}")
    bits = 0
    for i in range(1, d + 1):
        if x.bits & coordinate_mask(d, i):
            bits |= coordinate_mask(d, f(i))
    return Vertex(bits, x.params)


def transitive_automorphism(x: Vertex, y: Vertex) -> IndexPermutation:
    """An involutive coordinate permutation taking x to y.

    Coordinates where x and y agree are fixed. On the disagreement set the
    smallest remaining index with x_i = 1 is swapped with the smallest
    remaining index with x_i = 0, until the set is exhausted.
    """
    _same_params(x, y)
    d = x.params.d
    differ = [i for i in range(1, d + 1) if x.coordinate(i) != y.coordinate(i)]
    x_ones = [i for i in differ if x.coordinate(i) == 1]
    x_zeros = [i for i in differ if x.coordinate(i) == 0]
    # equal popcounts force len(x_ones) == len(x_zeros)
    return IndexPermutation.from_transpositions(d, zip(x_ones, x_zeros))
