import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from hypersimplex import GraphParams, RegimeError, SizeCapError, degree, vertex_count
from hypersimplex.oracle import adjacency_array, build_small_graph
from hypersimplex.spectral import (
    adjacency_matrix,
    cheeger_bounds,
    closed_form_spectrum,
    spectral_gap,
    spectrum_report,
    transition_matrix,
    verify_spectrum,
)

from .strategies import graph_params


def triples(spec):
    return [(e.j, e.eigenvalue, e.multiplicity) for e in spec.entries]


class TestClosedForm:
    def test_5_2(self):
        assert triples(closed_form_spectrum(GraphParams(5, 2))) == [(0, 6, 1), (1, 1, 4), (2, -2, 5)]

    def test_6_3(self):
        assert triples(closed_form_spectrum(GraphParams(6, 3))) == [
            (0, 9, 1), (1, 3, 5), (2, -1, 9), (3, -3, 5)
        ]

    @pytest.mark.parametrize("d", [2, 3, 7, 20])
    def test_complete_graph(self, d):
        assert triples(closed_form_spectrum(GraphParams(d, 1))) == [(0, d - 1, 1), (1, -1, d - 1)]

    def test_regime(self):
        with pytest.raises(RegimeError):
            closed_form_spectrum(GraphParams(5, 3))

    @given(graph_params(d_max=40, regime=True))
    def test_invariants(self, p):
        spec = closed_form_spectrum(p)
        assert len(spec.entries) == p.k + 1
        assert sum(e.multiplicity for e in spec.entries) == vertex_count(p)
        assert sum(e.multiplicity * e.eigenvalue for e in spec.entries) == 0
        assert spec.entries[0].eigenvalue == degree(p)
        assert degree(p) - spec.second == p.d
        ev = spec.eigenvalues
        assert all(a > b for a, b in zip(ev, ev[1:]))


class TestMatrices:
    def test_k3(self):
        a = adjacency_matrix(GraphParams(3, 1))
        assert (a == np.ones((3, 3)) - np.eye(3)).all()

    def test_octahedron_matches_oracle(self):
        p = GraphParams(4, 2)
        a = adjacency_matrix(p)
        assert (a == adjacency_array(build_small_graph(p))).all()
        assert set(a.sum(axis=1)) == {4}

    def test_5_2_eigenvalues(self):
        ev = np.sort(np.linalg.eigvalsh(adjacency_matrix(GraphParams(5, 2)).astype(float)))[::-1]
        expected = closed_form_spectrum(GraphParams(5, 2)).as_multiset()
        assert np.allclose(ev, expected, atol=1e-8, rtol=0)

    def test_cap(self):
        with pytest.raises(SizeCapError):
            adjacency_matrix(GraphParams(11, 5), cap=400)

    def test_transition_rows(self):
        for lazy in (False, True):
            P = transition_matrix(GraphParams(6, 2), lazy)
            assert np.allclose(P.sum(axis=1), 1.0)


class TestVerify:
    @pytest.mark.parametrize("d,k,expected", [
        (4, 2, {4: 1, 0: 3, -2: 2}),
        (5, 2, {6: 1, 1: 4, -2: 5}),
        (6, 2, {8: 1, 2: 5, -2: 9}),
    ])
    def test_pass(self, d, k, expected):
        rep = verify_spectrum(GraphParams(d, k), 1e-8)
        assert rep.passed
        assert {c["eigenvalue"]: c["found_multiplicity"] for c in rep.clusters} == expected
        assert rep.max_deviation < 1e-8

    def test_mismatch_is_reported(self, monkeypatch):
        from hypersimplex import spectral

        real = spectral.closed_form_spectrum

        def wrong(p):
            spec = real(p)
            e = spec.entries[1]
            bad = spectral.SpectrumEntry(e.j, e.eigenvalue + 1, e.multiplicity)
            return spectral.Spectrum(p, (spec.entries[0], bad) + spec.entries[2:])

        monkeypatch.setattr(spectral, "closed_form_spectrum", wrong)
        rep = verify_spectrum(GraphParams(5, 2))
        assert not rep.passed
        assert any("j=1" in m for m in rep.mismatches)


class TestBounds:
    def test_5_2(self):
        b = cheeger_bounds(GraphParams(5, 2))
        assert b.lower == Fraction(5, 2) and b.gap == 5
        assert b.upper == pytest.approx(math.sqrt(60), abs=1e-12)
        assert b.upper_squared == 60

    @pytest.mark.parametrize("d", range(2, 15))
    def test_lower_depends_only_on_d(self, d):
        lows = {cheeger_bounds(GraphParams(d, k)).lower for k in range(1, d // 2 + 1)}
        assert lows == {Fraction(d, 2)}

    @given(graph_params(d_max=40, regime=True))
    def test_invariants(self, p):
        b = cheeger_bounds(p)
        assert b.lower == Fraction(b.gap, 2)
        assert b.upper_squared == 2 * p.d * p.k * (p.d - p.k)
        assert b.upper == pytest.approx(math.sqrt(b.upper_squared), rel=1e-15)


class TestGap:
    @pytest.mark.parametrize("d,k,expected", [(5, 2, Fraction(2, 3)), (6, 3, Fraction(2, 3)), (4, 2, Fraction(1, 2))])
    def test_non_lazy(self, d, k, expected):
        assert spectral_gap(GraphParams(d, k)) == expected

    def test_octahedron_numeric(self):
        ev = np.linalg.eigvalsh(transition_matrix(GraphParams(4, 2)))
        ev = np.sort(np.abs(ev))[::-1]
        assert 1 - ev[1] == pytest.approx(0.5, abs=1e-12)

    @given(graph_params(d_max=30, regime=True))
    def test_lazy_positive(self, p):
        gap = spectral_gap(p, lazy=True)
        assert gap == Fraction(p.d, 2 * degree(p))
        assert gap > 0


def test_report_fields():
    doc = spectrum_report(GraphParams(5, 2))
    assert list(doc) == ["d", "k", "entries", "lower", "upper", "gap"]
    assert doc["entries"][2] == {"j": 2, "eigenvalue": -2, "multiplicity": 5}
