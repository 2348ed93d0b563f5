"""Random-walk generator of uniform k-subsets of {1, ..., d}.

A chain sits on a vertex of G(d, k) and moves to a uniformly random neighbour
each step. Two step rules are offered:

* ``rejection-pair``: draw coordinates r, s uniformly from 1..d until exactly
  one of x_r, x_s is 1, then swap them.
* ``direct-swap``: pick a uniform one-position and a uniform zero-position and
  swap them.

Both pick each of the k(d-k) neighbours with probability 1/(k(d-k)).
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Literal, Sequence

import numpy as np
from scipy import stats

from . import _kernels
from .core_graph import GraphParams, Vertex, complement_params, iter_vertices, vertex_count
from .errors import SamplerError, SizeCapError, UndersampledError
from .spectral import MATRIX_CAP, closed_form_spectrum, spectral_gap, transition_matrix

StepRule = Literal["rejection-pair", "direct-swap"]
STEP_RULES = ("rejection-pair", "direct-swap")
MAX_DRAWS = 10**6
DEFAULT_EPSILON = 0.01
BLOCK_SIZE = 4096
DRAW_CHUNK = 1 << 22


@dataclass(frozen=True)
class WalkConfig:
    params: GraphParams
    seed: int
    steps: int
    lazy: bool = False
    step_rule: StepRule = "rejection-pair"

    def __post_init__(self) -> None:
        if self.steps < 0:
            raise ValueError("steps must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.step_rule not in STEP_RULES:
            raise ValueError(f"unknown step rule {self.step_rule!r}")


@dataclass
class WalkState:
    current: Vertex
    rng: np.random.Generator = field(repr=False)
    steps_taken: int = 0
    rejections: int = 0

    @classmethod
    def start(cls, vertex: Vertex, seed: int) -> "WalkState":
        return cls(vertex, np.random.default_rng(seed))


def walk_step(state: WalkState, rule: StepRule = "rejection-pair", lazy: bool = False) -> WalkState:
    """One step of the walk; the generator inside ``state`` is advanced in place."""
    rng = state.rng
    x = state.current
    d = x.params.d
    if lazy and rng.random() < 0.5:
        return replace(state, steps_taken=state.steps_taken + 1)

    rejections = state.rejections
    if rule == "rejection-pair":
        for _ in range(MAX_DRAWS):
            r, s = rng.integers(1, d + 1, size=2)
            if x.coordinate(int(r)) + x.coordinate(int(s)) == 1:
                break
            rejections += 1
        else:
            raise SamplerError(f"no valid (r, s) pair in {MAX_DRAWS} draws; generator is broken")
        flip = (1 << (d - int(r))) | (1 << (d - int(s)))
    elif rule == "direct-swap":
        ones = [i for i in range(1, d + 1) if x.coordinate(i)]
        zeros = [i for i in range(1, d + 1) if not x.coordinate(i)]
        a = ones[rng.integers(len(ones))]
        b = zeros[rng.integers(len(zeros))]
        flip = (1 << (d - a)) | (1 << (d - b))
    else:
        raise ValueError(f"unknown step rule {rule!r}")
    return WalkState(Vertex(x.bits ^ flip, x.params), rng, state.steps_taken + 1, rejections)


def _resolve_start(params: GraphParams, start: Vertex | str | None) -> Vertex:
    if start is None or start == "canonical":
        return Vertex.canonical(params)
    if isinstance(start, str):
        return Vertex.parse(start, params)
    if start.params != params:
        raise ValueError(f"start vertex belongs to {start.params}, not {params}")
    return start


def sample_subset(config: WalkConfig, start: Vertex | str | None = "canonical") -> Vertex:
    """Run ``config.steps`` steps of a single chain and return where it ends."""
    state = WalkState.start(_resolve_start(config.params, start), config.seed)
    for _ in range(config.steps):
        state = walk_step(state, config.step_rule, config.lazy)
    return state.current


def _run_block(config: WalkConfig, start_bits: int, n: int, seed_seq: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.default_rng(seed_seq)
    d, k, steps, lazy = config.params.d, config.params.k, config.steps, config.lazy
    # internal bit t is coordinate d - t, the same layout as Vertex.bits
    x = np.full(n, start_bits, dtype=np.uint64).view(np.int64)
    if n == 0 or steps == 0:
        return x.view(np.uint64)

    if config.step_rule == "rejection-pair":
        span = d * d
        per_step = span / (2 * k * (d - k))
        masks = _kernels.pair_masks(d)
    else:
        span = k * (d - k)
        per_step = 1.0
    moves = n * steps * (0.5 if lazy else 1.0)
    draw_chunk = int(min(DRAW_CHUNK, max(1024, 1.05 * moves * per_step)))
    coin_chunk = int(min(DRAW_CHUNK, max(1024, 1.05 * n * steps))) if lazy else 1

    state = np.zeros(5, dtype=np.int64)
    draws = rng.integers(0, span, size=draw_chunk, dtype=np.int16)
    coins = rng.integers(0, 2, size=coin_chunk, dtype=np.int8) if lazy else np.zeros(1, np.int8)
    refills = 0
    while True:
        if config.step_rule == "rejection-pair":
            done = _kernels.rejection_pair_chains(x, masks, steps, lazy, draws, coins, state)
        else:
            done = _kernels.direct_swap_chains(x, d, k, steps, lazy, draws, coins, state)
        if done:
            return x.view(np.uint64)
        refills += 1
        if refills * draw_chunk > MAX_DRAWS * max(1, n * steps):
            raise SamplerError("walk consumed far more draws than expected; generator is broken")
        if state[_kernels.POS] >= draws.size:
            draws = rng.integers(0, span, size=draw_chunk, dtype=np.int16)
            state[_kernels.POS] = 0
        if lazy and state[_kernels.COIN_POS] >= coins.size:
            coins = rng.integers(0, 2, size=coin_chunk, dtype=np.int8)
            state[_kernels.COIN_POS] = 0


def sample_bits(
    config: WalkConfig,
    n: int,
    start: Vertex | str | None = "canonical",
    workers: int = 1,
) -> np.ndarray:
    """End points of ``n`` independent chains as raw uint64 bit patterns.

    Chains are grouped in fixed blocks, each with its own child stream of
    ``config.seed``, so the output does not depend on ``workers``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    start_v = _resolve_start(config.params, start)
    sizes = [min(BLOCK_SIZE, n - i) for i in range(0, n, BLOCK_SIZE)]
    seqs = np.random.SeedSequence(config.seed).spawn(len(sizes))
    jobs = [(config, start_v.bits, m, s) for m, s in zip(sizes, seqs)]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(workers) as pool:
            blocks = list(pool.map(lambda j: _run_block(*j), jobs))
    else:
        blocks = [_run_block(*j) for j in jobs]
    return np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.uint64)


def sample_subsets(
    config: WalkConfig,
    n: int,
    start: Vertex | str | None = "canonical",
    workers: int = 1,
) -> list[Vertex]:
    """``n`` independent chains, each run ``config.steps`` steps from ``start``."""
    p = config.params
    return [Vertex(b, p) for b in sample_bits(config, n, start, workers).tolist()]


def default_steps(p: GraphParams, lazy: bool = False, epsilon: float = DEFAULT_EPSILON) -> int:
    """ceil(ln(C(d,k)/epsilon) / gap), using the walk's absolute spectral gap."""
    q = p if p.in_regime else complement_params(p)[0]
    gap = spectral_gap(q, lazy)
    if gap <= 0:
        raise SamplerError(f"the non-lazy walk on {p} is periodic; use lazy=True or give steps")
    return math.ceil(math.log(vertex_count(p) / epsilon) / float(gap))


def subset_of(v: Vertex) -> frozenset[int]:
    return frozenset(i for i in range(1, v.params.d + 1) if v.coordinate(i))


def vertex_of(subset, params: GraphParams) -> Vertex:
    return Vertex.from_subset(subset, params)


def format_subset(v: Vertex) -> str:
    return ",".join(str(i) for i in sorted(subset_of(v)))


def parse_sample(line: str, params: GraphParams) -> Vertex:
    """Read either "1,4,6" or a 0/1 string."""
    line = line.strip()
    if len(line) == params.d and not set(line) - {"0", "1"}:
        return Vertex.parse(line, params)
    return vertex_of([int(t) for t in line.split(",")], params)


def tv_evolution(
    p: GraphParams,
    start: Vertex | str | None = "canonical",
    max_t: int = 20,
    lazy: bool = False,
) -> list[float]:
    """Exact total-variation distance to uniform after t = 0..max_t steps."""
    n = vertex_count(p)
    if n > MATRIX_CAP:
        raise SizeCapError(f"exact evolution of {p} needs {n} states, cap is {MATRIX_CAP}")
    q = p if p.in_regime else complement_params(p)[0]
    spec = closed_form_spectrum(q)
    if not lazy and abs(spec.smallest) >= spec.second:
        warnings.warn(
            f"|smallest eigenvalue| {abs(spec.smallest)} >= second eigenvalue {spec.second} on {p}; "
            "the non-lazy walk converges at the rate of its negative end",
            stacklevel=2,
        )
    start_v = _resolve_start(p, start)
    order = {v: i for i, v in enumerate(iter_vertices(p))}
    P = transition_matrix(p, lazy)
    dist = np.zeros(n)
    dist[order[start_v]] = 1.0
    out = []
    for t in range(max_t + 1):
        if t:
            dist = dist @ P
        if abs(dist.sum() - 1.0) > 1e-12:
            raise ArithmeticError(f"distribution mass drifted to {dist.sum()!r} at t={t}")
        out.append(0.5 * float(np.abs(dist - 1.0 / n).sum()))
    return out


@dataclass(frozen=True)
class UniformityReport:
    statistic: float
    dof: int
    p_value: float
    significance: float
    n_samples: int

    @property
    def passed(self) -> bool:
        return self.p_value > self.significance

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "dof": self.dof,
            "p_value": self.p_value,
            "significance": self.significance,
            "n_samples": self.n_samples,
            "pass": self.passed,
        }


def uniformity_test(samples: Sequence[Vertex], significance: float = 0.001) -> UniformityReport:
    """Chi-square goodness of fit of the samples against uniform over all C(d, k) subsets."""
    if not samples:
        raise UndersampledError("no samples given", required_samples=1)
    p = samples[0].params
    if any(s.params != p for s in samples):
        raise ValueError("samples come from different graphs")
    bits = np.fromiter((s.bits for s in samples), dtype=np.uint64, count=len(samples))
    return uniformity_test_bits(bits, p, significance)


def uniformity_test_bits(bits: np.ndarray, p: GraphParams, significance: float = 0.001) -> UniformityReport:
    """Same test on raw bit patterns, as returned by ``sample_bits``."""
    cells = vertex_count(p)
    n = len(bits)
    if n == 0 or n / cells < 5:
        need = 5 * cells
        raise UndersampledError(
            f"{n} samples over {cells} cells gives expected count {n / cells:.2f} < 5; "
            f"draw at least {need} samples",
            required_samples=need,
        )
    bits = np.asarray(bits, dtype=np.uint64)
    if np.any(np.bitwise_count(bits) != p.k) or (p.d < 64 and np.any(bits >> np.uint64(p.d))):
        raise ValueError(f"some samples are not vertices of {p}")
    _, counts = np.unique(bits, return_counts=True)
    observed = np.zeros(cells)
    observed[: counts.size] = counts
    expected = n / cells
    statistic = float(((observed - expected) ** 2).sum() / expected)
    dof = cells - 1
    return UniformityReport(statistic, dof, float(stats.chi2.sf(statistic, dof)), significance, n)
