"""Cross-check every closed form against the brute-force oracle on small instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterator

from . import core_graph, oracle, spectral, structure
from .core_graph import GraphParams


@dataclass(frozen=True)
class CheckRecord:
    check: str
    d: int
    k: int
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "d": self.d,
            "k": self.k,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def instances(d_max: int, d_min: int = 2) -> Iterator[GraphParams]:
    for d in range(d_min, d_max + 1):
        for k in range(1, d // 2 + 1):
            yield GraphParams(d, k)


def _rec(check: str, p: GraphParams, expected, actual, passed: bool | None = None) -> CheckRecord:
    return CheckRecord(check, p.d, p.k, expected, actual, expected == actual if passed is None else passed)


def check_instance(p: GraphParams, automorphism_pairs: int = 10, seed: int = 0) -> list[CheckRecord]:
    cg = core_graph
    g = oracle.build_small_graph(p)
    n = g.n
    out = [
        _rec("vertex_count", p, cg.vertex_count(p), n),
        _rec("degree", p, [cg.degree(p)], sorted(set(g.degrees()))),
        _rec("edge_count", p, cg.edge_count(p), len(g.edges)),
    ]

    dist = oracle.all_pairs_distances(g)
    agree = sum(
        cg.distance(x, y) == dist[i][j]
        for i, x in enumerate(g.vertices)
        for j, y in enumerate(g.vertices)
    )
    out.append(_rec("distance_formula", p, n * n, agree))
    out.append(_rec("diameter", p, cg.diameter(p), max(max(r) for r in dist)))
    out.append(_rec("adjacency_symmetry", p, True, all(
        cg.is_adjacent(x, y) == g.has_edge(i, j)
        for i, x in enumerate(g.vertices)
        for j, y in enumerate(g.vertices)
    )))
    out.append(_rec("distance_regular", p, True, oracle.is_distance_regular(g)))

    if p.k >= 2 and n <= oracle.CLIQUE_CAP:
        out.append(_rec("clique_number", p, structure.clique_number(p), oracle.max_clique(g)))
    if p.k >= 2:
        cl = structure.canonical_clique(p)
        ok = len(cl) == p.d - p.k + 1 and all(
            cg.is_adjacent(a, b) for a in cl for b in cl if a != b
        )
        out.append(_rec("canonical_clique", p, True, ok))

    if n <= spectral.MATRIX_CAP:
        rep = spectral.verify_spectrum(p, 1e-8)
        out.append(_rec("spectrum", p, True, rep.passed))
    bounds = spectral.cheeger_bounds(p)
    if n <= oracle.EXPANSION_CAP and n >= 2:
        chi = oracle.exact_expansion(g).value
        inside = bounds.lower <= chi and float(chi) <= bounds.upper + 1e-12 and chi >= 1
        out.append(_rec(
            "cheeger_sandwich", p, [str(bounds.lower), bounds.upper], str(chi), passed=inside
        ))
    if n <= spectral.MATRIX_CAP:
        sweep = oracle.sweep_expansion_upper_bound(g)
        ok = bounds.lower <= sweep and float(sweep) <= bounds.upper + 1e-12
        out.append(_rec("sweep_bound", p, [str(bounds.lower), bounds.upper], str(sweep), passed=ok))

    if n <= oracle.HAMILTON_CAP:
        out.append(_rec("hamilton_connected", p, True, oracle.hamilton_connected_check(g)))
    if n <= oracle.CONNECTIVITY_CAP:
        out.append(_rec(
            "vertex_connectivity", p, True, oracle.vertex_connectivity_at_least(g, p.d - 1)
        ))

    dec = structure.decompose(p, 1)
    total, e1, e0, links = dec.edge_identity()
    out.append(_rec(
        "decomposition",
        p,
        [structure.edge_count_or_zero(p.d, p.k), structure.linking_edge_formula(p)],
        [total, links],
        passed=(
            total == e1 + e0 + links
            and links == structure.linking_edge_formula(p)
            and total == structure.edge_count_or_zero(p.d, p.k)
        ),
    ))

    rng = random.Random(seed * 1_000_003 + p.d * 101 + p.k)
    ok = True
    for _ in range(automorphism_pairs):
        x, y = rng.choice(g.vertices), rng.choice(g.vertices)
        f = cg.transitive_automorphism(x, y)
        ok &= cg.apply_permutation(f, x) == y and f.compose(f).is_identity()
        ok &= all(
            cg.is_adjacent(cg.apply_permutation(f, g.vertices[i]), cg.apply_permutation(f, g.vertices[j]))
            for i, j in g.edges
        )
    out.append(_rec("automorphism", p, True, ok))
    return out


def run_suite(d_max: int = 6, d_min: int = 2) -> list[CheckRecord]:
    records: list[CheckRecord] = []
    for p in instances(d_max, d_min):
        records.extend(check_instance(p))
    return records


def summarize(records: list[CheckRecord]) -> dict[str, dict[str, int]]:
    table: dict[str, dict[str, int]] = {}
    for r in records:
        row = table.setdefault(r.check, {"pass": 0, "fail": 0})
        row["pass" if r.passed else "fail"] += 1
    return table
