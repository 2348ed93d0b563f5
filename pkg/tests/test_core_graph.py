import math
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersimplex import (
    ArithmeticOverflowError,
    GraphParams,
    IndexPermutation,
    ParameterMismatchError,
    RegimeError,
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
from hypersimplex.oracle import bfs_distances, build_small_graph, is_polytope_edge

from .strategies import graph_params, params_and_pair, v, vertices


def brute_words(d, k):
    return [w for w in range(1 << d) if bin(w).count("1") == k]


class TestParams:
    @pytest.mark.parametrize("d,k", [(1, 1), (5, 0), (5, 5), (3, 4), (65, 2)])
    def test_rejects_invalid(self, d, k):
        with pytest.raises(ValueError):
            GraphParams(d, k)

    def test_small_d_accepted(self):
        assert GraphParams(2, 1).in_regime
        assert not GraphParams(3, 2).in_regime


class TestVertex:
    def test_text_roundtrip(self):
        x = v("11000")
        assert str(x) == "11000"
        assert x.params == GraphParams(5, 2)
        assert x.coordinates() == (1, 1, 0, 0, 0)

    @pytest.mark.parametrize("text", ["1100", "111000", "11a00"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Vertex.parse(text, GraphParams(5, 2))

    def test_popcount_enforced(self):
        with pytest.raises(ValueError):
            Vertex(0b111, GraphParams(5, 2))

    def test_canonical(self):
        assert str(Vertex.canonical(GraphParams(5, 2))) == "11000"


class TestCounts:
    @pytest.mark.parametrize("d,k,expected", [(5, 2, 10), (4, 1, 4), (12, 5, 792)])
    def test_vertex_count(self, d, k, expected):
        assert vertex_count(GraphParams(d, k)) == expected

    def test_vertex_count_oracle_12_5(self):
        assert len(brute_words(12, 5)) == 792

    def test_overflow_reported(self):
        assert vertex_count(GraphParams(64, 32)) == math.comb(64, 32)
        with pytest.raises(ArithmeticOverflowError):
            edge_count(GraphParams(64, 32))

    @pytest.mark.parametrize("d,k,expected", [(5, 2, 6), (7, 1, 6), (9, 4, 20)])
    def test_degree(self, d, k, expected):
        assert degree(GraphParams(d, k)) == expected

    def test_degree_9_4_by_enumeration(self):
        p = GraphParams(9, 4)
        x = Vertex.canonical(p)
        assert sum(inner_product(x, y) == 3 for y in iter_vertices(p)) == 20

    @pytest.mark.parametrize("d,k,expected", [(5, 2, 30), (4, 2, 12), (6, 3, 90)])
    def test_edge_count(self, d, k, expected):
        assert edge_count(GraphParams(d, k)) == expected

    def test_edge_count_6_3_pairs(self):
        vs = list(iter_vertices(GraphParams(6, 3)))
        assert sum(is_adjacent(a, b) for a, b in combinations(vs, 2)) == 90

    @given(graph_params(d_max=30))
    def test_factorial_form_equals_handshake(self, p):
        d, k = p.d, p.k
        fact = math.factorial(d) // (2 * math.factorial(k - 1) * math.factorial(d - k - 1))
        assert edge_count(p) == fact == vertex_count(p) * degree(p) // 2


class TestAdjacency:
    def test_inner_products(self, worked_pair):
        assert inner_product(v("11000"), v("11000")) == 2
        assert inner_product(v("11000"), v("00110")) == 0
        x, y = worked_pair
        # ones of x: 1,2,4,6,7,9; ones of y: 1,4,5,8,10,11
        assert sum(a * b for a, b in zip(x.coordinates(), y.coordinates())) == 2
        assert inner_product(x, y) == 2

    def test_mismatch(self):
        with pytest.raises(ParameterMismatchError):
            inner_product(v("11000"), v("1100"))

    def test_examples(self):
        assert is_adjacent(v("11000"), v("10100"))
        assert not is_adjacent(v("11000"), v("00110"))
        assert not is_adjacent(v("11000"), v("11000"))

    def test_polytope_definition_g42(self):
        g = build_small_graph(GraphParams(4, 2))
        pairs = list(combinations(range(g.n), 2))
        assert len(pairs) == 15
        for i, j in pairs:
            assert is_adjacent(g.vertices[i], g.vertices[j]) == is_polytope_edge(g, i, j)

    @pytest.mark.parametrize("d,k", [(5, 2), (6, 3), (5, 1)])
    def test_polytope_definition_more(self, d, k):
        g = build_small_graph(GraphParams(d, k))
        for i, j in combinations(range(g.n), 2):
            assert is_adjacent(g.vertices[i], g.vertices[j]) == is_polytope_edge(g, i, j)

    @given(params_and_pair())
    def test_symmetric_and_hamming(self, case):
        _, x, y = case
        assert is_adjacent(x, y) == is_adjacent(y, x)
        assert is_adjacent(x, y) == ((x.bits ^ y.bits).bit_count() == 2)
        lo = max(0, 2 * x.params.k - x.params.d)
        assert lo <= inner_product(x, y) <= x.params.k


class TestNeighbors:
    def test_tiny(self):
        assert [str(w) for w in neighbors(v("110"))] == ["011", "101"]

    def test_g62_size(self):
        assert all(len(neighbors(x)) == 8 for x in iter_vertices(GraphParams(6, 2)))

    def test_against_filter(self):
        x = v("11000")
        expected = [y for y in iter_vertices(x.params) if is_adjacent(x, y)]
        assert neighbors(x) == expected
        assert len(expected) == 6

    @pytest.mark.parametrize("d", range(2, 11))
    def test_regular(self, d):
        for k in range(1, d):
            p = GraphParams(d, k)
            degs = [len(neighbors(x)) for x in iter_vertices(p)]
            assert set(degs) == {degree(p)}
            assert sum(degs) == 2 * edge_count(p)

    @given(graph_params(d_max=16).flatmap(lambda p: vertices(p)))
    def test_sorted_unique_adjacent(self, x):
        ns = neighbors(x)
        assert [w.bits for w in ns] == sorted({w.bits for w in ns})
        assert all(is_adjacent(x, w) for w in ns)


class TestDistance:
    def test_examples(self):
        assert distance(v("11000"), v("11000")) == 0
        assert distance(v("11000"), v("00110")) == 2

    def test_regime_error_names_fix(self):
        with pytest.raises(RegimeError, match="complement_params"):
            distance(v("11100"), v("01110"))
        with pytest.raises(RegimeError):
            diameter(GraphParams(5, 3))

    def test_g63_all_pairs_bfs(self):
        g = build_small_graph(GraphParams(6, 3))
        agree = 0
        for i, j in combinations(range(g.n), 2):
            dist = bfs_distances(g, g.vertices[i])
            agree += distance(g.vertices[i], g.vertices[j]) == dist[j]
        assert agree == 190

    @pytest.mark.parametrize("d,k,expected", [(4, 1, 1), (9, 1, 1), (6, 3, 3), (7, 2, 2)])
    def test_diameter(self, d, k, expected):
        assert diameter(GraphParams(d, k)) == expected

    def test_diameter_7_2_bfs(self):
        g = build_small_graph(GraphParams(7, 2))
        assert max(max(bfs_distances(g, x)) for x in g.vertices) == 2

    @given(params_and_pair(regime=True), st.data())
    def test_triangle_inequality(self, case, data):
        p, x, y = case
        z = data.draw(vertices(p))
        assert distance(x, z) <= distance(x, y) + distance(y, z)
        assert (distance(x, y) == 1) == is_adjacent(x, y)


class TestComplement:
    def test_example(self):
        q, f = complement_params(GraphParams(5, 3))
        assert q == GraphParams(5, 2)
        assert str(f(v("11100"))) == "00011"

    def test_self_complementary(self):
        assert complement_params(GraphParams(6, 3))[0] == GraphParams(6, 3)

    def test_edges_preserved_g53(self):
        p = GraphParams(5, 3)
        _, f = complement_params(p)
        edges = [(a, b) for a, b in combinations(iter_vertices(p), 2) if is_adjacent(a, b)]
        assert len(edges) == 30
        assert all(is_adjacent(f(a), f(b)) for a, b in edges)

    @given(params_and_pair(d_max=20))
    def test_isomorphism(self, case):
        p, x, y = case
        _, f = complement_params(p)
        assert is_adjacent(x, y) == is_adjacent(f(x), f(y))
        assert f(f(x)) == x


class TestAutomorphism:
    def test_identity_for_equal(self):
        x = v("1101000")
        assert transitive_automorphism(x, x).is_identity()

    def test_worked_example(self, worked_pair):
        x, y = worked_pair
        f = transitive_automorphism(x, y)
        assert f.images == (1, 5, 3, 4, 2, 8, 10, 6, 11, 7, 9, 12)
        assert apply_permutation(f, x) == y
        assert str(apply_permutation(f, v("101010101010"))) == "111000001110"

    def test_random_pairs_g83(self):
        import random

        rng = random.Random(8)
        p = GraphParams(8, 3)
        vs = list(iter_vertices(p))
        edges = [(a, b) for a, b in combinations(vs, 2) if is_adjacent(a, b)]
        for _ in range(200):
            x, y = rng.choice(vs), rng.choice(vs)
            f = transitive_automorphism(x, y)
            assert apply_permutation(f, x) == y
            assert f.compose(f).is_identity()
            assert all(is_adjacent(apply_permutation(f, a), apply_permutation(f, b)) for a, b in edges)

    @given(params_and_pair(d_max=14), st.data())
    def test_contract(self, case, data):
        p, x, y = case
        f = transitive_automorphism(x, y)
        assert apply_permutation(f, x) == y
        assert apply_permutation(f, y) == x
        assert f.compose(f).is_identity()
        a, b = data.draw(vertices(p)), data.draw(vertices(p))
        assert inner_product(apply_permutation(f, a), apply_permutation(f, b)) == inner_product(a, b)


class TestPermutation:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            IndexPermutation((1, 1, 3))

    def test_identity_apply(self):
        x = v("0110100")
        assert apply_permutation(IndexPermutation.identity(7), x) == x

    def test_moves_bit_to_image(self):
        f = IndexPermutation((2, 3, 1))
        assert str(apply_permutation(f, v("100"))) == "010"

    def test_random_popcount_g73(self):
        import random

        rng = random.Random(73)
        p = GraphParams(7, 3)
        vs = list(iter_vertices(p))
        for _ in range(1000):
            images = list(range(1, 8))
            rng.shuffle(images)
            out = apply_permutation(IndexPermutation(tuple(images)), rng.choice(vs))
            assert out.bits.bit_count() == 3

    def test_mismatch(self):
        with pytest.raises(ParameterMismatchError):
            apply_permutation(IndexPermutation.identity(4), v("11000"))


@pytest.mark.parametrize("d", range(2, 10))
def test_distance_equals_bfs_all(d):
    for k in range(1, d // 2 + 1):
        g = build_small_graph(GraphParams(d, k))
        for i, x in enumerate(g.vertices):
            dist = bfs_distances(g, x)
            assert all(distance(x, y) == dist[j] for j, y in enumerate(g.vertices))


def test_enumeration_matches_bruteforce():
    for d, k in product(range(2, 9), range(1, 8)):
        if k < d:
            assert [x.bits for x in iter_vertices(GraphParams(d, k))] == brute_words(d, k)
