# falsifier: least energy over distributions of mass on d = n - m, at |d| photons per unit mass

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from constants import (
    D_MAX_MARGIN, DEFAULT_SAMPLES, DEFAULT_SEED, DEGENERATE_TOL, MAX_WORKERS,
    NORM_TOL, ORACLE_GRID_STEP, ORACLE_MAX_SUPPORT, SATURATION_TOL,
)
from design import solve_x_star
from errors import InvalidArgs, ZeroState
from fock import ProbeState, norm

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalDistribution:
    weights: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        clean: Dict[int, float] = {}
        for d, p in self.weights.items():
            p = float(p)
            if p < 0.0:
                raise InvalidArgs(f"Negative weight {p} at d={d}")
            if p > 0.0:
                clean[int(d)] = clean.get(int(d), 0.0) + p
        total = sum(clean.values())
        if abs(total - 1.0) > NORM_TOL:
            raise InvalidArgs(f"Weights sum to {total:.17g}, expected 1")
        object.__setattr__(self, "weights", clean)

    @property
    def d_max(self) -> int:
        return max((abs(d) for d in self.weights), default=0)


@dataclass
class OracleReport:
    delta: float
    K: float
    d_max: int
    samples: int
    seed: int
    symmetric: float = math.inf
    grid: float = math.inf
    sampled: float = math.inf
    feasible_samples: int = 0

    @property
    def best(self) -> float:
        return min(self.symmetric, self.grid, self.sampled)


def dist_overlap(dist: DiagonalDistribution, delta: float) -> complex:
    if not dist.weights:
        return 0j
    d = np.array(list(dist.weights), dtype=float)
    p = np.array(list(dist.weights.values()), dtype=float)
    return complex(np.sum(p * np.exp(1j * delta * d)))


def dist_energy(dist: DiagonalDistribution) -> float:
    return float(sum(p * abs(d) for d, p in dist.weights.items()))


def induced_distribution(state: ProbeState) -> DiagonalDistribution:
    nrm_sq = norm(state) ** 2
    if nrm_sq == 0.0:
        raise ZeroState("Cannot induce a distribution from the zero state")
    weights: Dict[int, float] = {}
    for idx, amp in state.amplitudes.items():
        weights[idx.difference] = weights.get(idx.difference, 0.0) + abs(amp) ** 2 / nrm_sq
    return DiagonalDistribution(weights)


def min_d_max(delta: float) -> int:
    return math.ceil(solve_x_star(delta)) + 3


def default_d_max(delta: float) -> int:
    return math.ceil(solve_x_star(delta)) + D_MAX_MARGIN


# search phases
def _symmetric_best(delta: float, K: float, d_max: int) -> float:
    # mass p on +-n and 1 - p on 0: overlap 1 - p (1 - cos(delta n)) = K
    best = math.inf
    for n in range(1, d_max + 1):
        gap = 1.0 - math.cos(delta * n)
        if gap <= DEGENERATE_TOL:
            continue
        p = (1.0 - K) / gap
        if p > 1.0:
            continue
        best = min(best, p * n)
    return best


def _pair_best(delta: float, K: float, n: int, m: int, p_grid: np.ndarray) -> float:
    # support {0, +n, -m}: p_n on the grid, p_m the least value keeping
    # |1 - p_n (1 - a) - p_m (1 - b)| <= K
    a = np.exp(1j * delta * n)
    b = np.exp(-1j * delta * m)
    w = 1.0 - p_grid * (1.0 - a)
    v = 1.0 - b
    bound = K + SATURATION_TOL
    vv = abs(v) ** 2

    if vv <= DEGENERATE_TOL:
        ok = np.abs(w) <= bound
        return float(np.min(p_grid[ok] * n)) if np.any(ok) else math.inf

    # |w - p v|^2 <= bound^2 is a quadratic in p
    proj = (w * np.conj(v)).real
    disc = proj ** 2 - vv * (np.abs(w) ** 2 - bound ** 2)
    real = disc >= 0.0
    root = np.sqrt(np.where(real, disc, 0.0))
    lo = np.maximum((proj - root) / vv, 0.0)
    hi = np.minimum((proj + root) / vv, 1.0 - p_grid)
    ok = real & (lo <= hi)
    if not np.any(ok):
        return math.inf
    # re-check on the chosen point so rounding never admits an infeasible one
    z = np.abs(w[ok] - lo[ok] * v)
    feasible = z <= bound
    if not np.any(feasible):
        return math.inf
    energies = p_grid[ok][feasible] * n + lo[ok][feasible] * m
    return float(np.min(energies))


def _grid_best(delta: float, K: float, d_max: int, workers: int) -> float:
    p_grid = np.arange(0.0, 1.0 + ORACLE_GRID_STEP / 2, ORACLE_GRID_STEP)
    pairs = [(n, m) for n in range(1, d_max + 1) for m in range(1, d_max + 1)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as ex:
        found = list(ex.map(lambda nm: _pair_best(delta, K, nm[0], nm[1], p_grid), pairs))
    return min(found, default=math.inf)


def _sampled_best(delta: float, K: float, d_max: int, samples: int, seed: int):
    if samples <= 0:
        return math.inf, 0
    rng = np.random.default_rng(seed)
    support = rng.integers(-d_max, d_max + 1, size=(samples, ORACLE_MAX_SUPPORT))
    sizes = rng.integers(1, ORACLE_MAX_SUPPORT + 1, size=samples)
    # Dirichlet(1, ..., 1) over the first `size` slots
    raw = rng.exponential(1.0, size=(samples, ORACLE_MAX_SUPPORT))
    raw *= np.arange(ORACLE_MAX_SUPPORT)[None, :] < sizes[:, None]
    weights = raw / raw.sum(axis=1, keepdims=True)

    gamma = np.abs(np.sum(weights * np.exp(1j * delta * support), axis=1))
    energies = np.sum(weights * np.abs(support), axis=1)
    feasible = gamma <= K + SATURATION_TOL
    count = int(np.count_nonzero(feasible))
    if count == 0:
        return math.inf, 0
    return float(np.min(energies[feasible])), count


def brute_force_search(delta: float, K: float, d_max: int, samples: int = DEFAULT_SAMPLES,
                       seed: int = DEFAULT_SEED, workers: int = MAX_WORKERS) -> OracleReport:
    delta, K = float(delta), float(K)
    if not math.isfinite(delta) or delta <= 0.0 or delta > math.pi:
        raise InvalidArgs(f"delta must lie in (0, pi], got {delta}")
    if not 0.0 <= K <= 1.0:
        raise InvalidArgs(f"K must lie in [0, 1], got {K}")
    if samples < 0:
        raise InvalidArgs(f"samples must be non-negative, got {samples}")
    need = min_d_max(delta)
    if d_max < need:
        raise InvalidArgs(f"d_max={d_max} is below ceil(x*) + 3 = {need}")

    report = OracleReport(delta=delta, K=K, d_max=d_max, samples=samples, seed=seed)
    # the vacuum is feasible once the budget allows identical outputs
    if K >= 1.0 - SATURATION_TOL:
        report.symmetric = 0.0
        return report

    report.symmetric = _symmetric_best(delta, K, d_max)
    report.grid = _grid_best(delta, K, d_max, workers)
    report.sampled, report.feasible_samples = _sampled_best(delta, K, d_max, samples, seed)
    log.debug(
        "oracle delta=%.17g K=%.17g: symmetric=%.17g grid=%.17g sampled=%.17g (%d feasible)",
        delta, K, report.symmetric, report.grid, report.sampled, report.feasible_samples,
    )
    return report


def brute_force_min_energy(delta: float, K: float, D_max: int, samples: int = DEFAULT_SAMPLES,
                           seed: int = DEFAULT_SEED) -> float:
    return brute_force_search(delta, K, D_max, samples, seed).best
