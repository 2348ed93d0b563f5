"""Closed-form spectrum, Cheeger bounds and explicit matrices for G(d, k)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core_graph import GraphParams, degree, iter_vertices, vertex_count
from .errors import SizeCapError

MATRIX_CAP = 512


@dataclass(frozen=True)
class SpectrumEntry:
    j: int
    eigenvalue: int
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    params: GraphParams
    entries: tuple[SpectrumEntry, ...]

    @property
    def eigenvalues(self) -> list[int]:
        return [e.eigenvalue for e in self.entries]

    @property
    def second(self) -> int:
        """Second largest eigenvalue (j = 1)."""
        return self.entries[1].eigenvalue

    @property
    def smallest(self) -> int:
        return self.entries[-1].eigenvalue

    def as_multiset(self) -> list[int]:
        """All eigenvalues with repetition, descending."""
        return [e.eigenvalue for e in self.entries for _ in range(e.multiplicity)]


def closed_form_spectrum(p: GraphParams) -> Spectrum:
    p.require_regime("closed_form_spectrum")
    d, k = p.d, p.k
    entries = []
    for j in range(k + 1):
        lam = (k - j) * (d - k - j) - j
        mult = math.comb(d, j) - (math.comb(d, j - 1) if j >= 1 else 0)
        entries.append(SpectrumEntry(j, lam, mult))
    return Spectrum(p, tuple(entries))


def adjacency_matrix(p: GraphParams, cap: int = MATRIX_CAP) -> np.ndarray:
    """0/1 adjacency matrix with rows and columns in canonical vertex order."""
    n = vertex_count(p)
    if n > cap:
        raise SizeCapError(f"adjacency matrix of {p} has {n} rows, cap is {cap}")
    bits = np.array([v.bits for v in iter_vertices(p)], dtype=np.uint64)
    # adjacent iff inner product is k-1
    shared = np.bitwise_count(bits[:, None] & bits[None, :])
    return (shared == p.k - 1).astype(np.int8)


def transition_matrix(p: GraphParams, lazy: bool = False, cap: int = MATRIX_CAP) -> np.ndarray:
    a = adjacency_matrix(p, cap).astype(float) / degree(p)
    if lazy:
        return 0.5 * (np.eye(a.shape[0]) + a)
    return a


@dataclass
class SpectrumVerification:
    params: GraphParams
    tol: float
    passed: bool
    clusters: list[dict] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max((c["max_deviation"] for c in self.clusters), default=0.0)


def _cluster(values: np.ndarray, gap: float) -> list[np.ndarray]:
    values = np.sort(values)[::-1]
    splits = np.flatnonzero(-np.diff(values) > gap) + 1
    return np.split(values, splits)


def verify_spectrum(p: GraphParams, tol: float = 1e-8, cap: int = MATRIX_CAP) -> SpectrumVerification:
    """Compare a numeric eigensolve of the adjacency matrix with the closed form."""
    expected = closed_form_spectrum(p)
    numeric = np.linalg.eigvalsh(adjacency_matrix(p, cap).astype(float))
    clusters = _cluster(numeric, 10 * tol)
    report = SpectrumVerification(p, tol, passed=True)
    if len(clusters) != len(expected.entries):
        report.passed = False
        report.mismatches.append(
            f"found {len(clusters)} eigenvalue clusters, expected {len(expected.entries)}"
        )
    for entry, cl in zip(expected.entries, clusters):
        dev = float(np.max(np.abs(cl - entry.eigenvalue)))
        report.clusters.append({
            "j": entry.j,
            "eigenvalue": entry.eigenvalue,
            "expected_multiplicity": entry.multiplicity,
            "found_multiplicity": int(cl.size),
            "max_deviation": dev,
        })
        if dev > tol:
            report.passed = False
            report.mismatches.append(
                f"cluster near {entry.eigenvalue} (j={entry.j}) deviates by {dev:.3e} > {tol:g}"
            )
        if cl.size != entry.multiplicity:
            report.passed = False
            report.mismatches.append(
                f"eigenvalue {entry.eigenvalue} (j={entry.j}) has multiplicity {cl.size}, "
                f"expected {entry.multiplicity}"
            )
    return report


@dataclass(frozen=True)
class ExpansionBounds:
    lower: Fraction
    upper: float
    degree: int
    gap: int

    @property
    def upper_squared(self) -> int:
        return 2 * self.degree * self.gap


def cheeger_bounds(p: GraphParams) -> ExpansionBounds:
    """Cheeger sandwich (r - l1)/2 <= edge expansion <= sqrt(2 r (r - l1)).

    For every valid (d, k) the gap r - l1 equals d, so the lower bound d/2 does
    not depend on k.
    """
    spec = closed_form_spectrum(p)
    r = spec.entries[0].eigenvalue
    gap = r - spec.second
    return ExpansionBounds(Fraction(gap, 2), math.sqrt(2 * r * gap), r, gap)


def spectral_gap(p: GraphParams, lazy: bool = False) -> Fraction:
    """Absolute spectral gap of the simple random walk (or its lazy version)."""
    spec = closed_form_spectrum(p)
    r = spec.entries[0].eigenvalue
    if lazy:
        # lazy eigenvalues (1 + l/r)/2 are all >= 0, so l1 gives the slowest mode
        return (1 - Fraction(spec.second, r)) / 2
    return 1 - Fraction(max(abs(spec.second), abs(spec.smallest)), r)


def spectrum_report(p: GraphParams) -> dict:
    """JSON-ready document for the spectrum and its expansion bounds."""
    spec = closed_form_spectrum(p)
    bounds = cheeger_bounds(p)
    return {
        "d": p.d,
        "k": p.k,
        "entries": [
            {"j": e.j, "eigenvalue": e.eigenvalue, "multiplicity": e.multiplicity}
            for e in spec.entries
        ],
        "lower": float(bounds.lower),
        "upper": bounds.upper,
        "gap": bounds.gap,
    }
