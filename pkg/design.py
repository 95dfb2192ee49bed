# NOON + vacuum probe: overlap 1 - alpha^2 (1 - cos(delta n)), optimum at floor/ceil of 2 t/delta, tan t = 2t

import functools
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List

from scipy.optimize import bisect

from constants import DEGENERATE_TOL, ROOT_BRACKET, ROOT_XTOL, SATURATION_TOL, TIE_RTOL
from device import DeviceSpec
from discrimination import ReadingTask, probability, threshold_K
from errors import DegeneratePhase, Infeasible, InvalidDelta
from fock import FockIndex, ProbeState, apply_device, overlap

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DesignResult:
    n_star: int
    alpha: float
    probe: ProbeState
    energy: float
    achieved_overlap: float
    achieved_probability: float
    task: ReadingTask
    delta: float

    @property
    def K(self) -> float:
        return threshold_K(self.task)

    @property
    def is_vacuum(self) -> bool:
        return self.alpha == 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta": self.delta,
            "mode": self.task.mode,
            "q": self.task.q,
            "K": self.K,
            "n_star": self.n_star,
            "alpha": self.alpha,
            "energy": self.energy,
            "achieved_probability": self.achieved_probability,
            "probe": self.probe.to_rows(),
        }


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not math.isfinite(delta) or delta <= 0.0 or delta > math.pi:
        raise InvalidDelta(f"delta must lie in (0, pi], got {delta}")
    return delta


@functools.lru_cache(maxsize=1)
def _tan_root() -> float:
    # first positive root of tan t = 2t; delta x* = 2 t* for every delta
    return bisect(lambda t: math.tan(t) - 2.0 * t, *ROOT_BRACKET, xtol=ROOT_XTOL)


def solve_x_star(delta: float) -> float:
    delta = _check_delta(delta)
    return 2.0 * _tan_root() / delta


def candidate_energy(n: int, delta: float, K: float) -> float:
    if n < 1:
        raise DegeneratePhase(f"Photon number must be at least 1, got {n}")
    gap = 1.0 - math.cos(delta * n)
    if gap <= DEGENERATE_TOL:
        raise DegeneratePhase(f"cos(delta * {n}) = 1, the NOON pair picks up no relative phase")
    return n * (1.0 - K) / gap


def candidates(delta: float) -> List[int]:
    x = solve_x_star(delta)
    lo, hi = max(1, math.floor(x)), max(1, math.ceil(x))
    return [lo] if lo == hi else [lo, hi]


def optimal_photon_number(delta: float, K: float = 0.0) -> int:
    best_n, best_e = None, math.inf
    for n in candidates(delta):
        try:
            e = candidate_energy(n, delta, K)
        except DegeneratePhase:
            log.debug("delta=%.17g: skipping degenerate n=%d", delta, n)
            continue
        log.debug("delta=%.17g: E(%d) = %.17g", delta, n, e)
        # candidates come in increasing n, ties within rounding keep the smaller one
        if best_n is None or e < best_e * (1.0 - TIE_RTOL):
            best_n, best_e = n, e
    if best_n is None:
        raise Infeasible(f"No non-degenerate photon number for delta={delta}")
    return best_n


def noon_vacuum_probe(n: int, alpha: float) -> ProbeState:
    half = alpha / math.sqrt(2.0)
    amps = {
        FockIndex(0, n): half,
        FockIndex(n, 0): half,
        FockIndex(0, 0): math.sqrt(max(0.0, 1.0 - alpha * alpha)),
    }
    return ProbeState(amps, cutoff=n)


def design_probe(delta: float, task: ReadingTask) -> DesignResult:
    delta = _check_delta(delta)
    K = threshold_K(task)
    n_star = optimal_photon_number(delta, min(K, 1.0))

    if K >= 1.0:
        alpha = 0.0
    else:
        alpha_sq = (1.0 - K) / (1.0 - math.cos(delta * n_star))
        if alpha_sq > 1.0 + SATURATION_TOL:
            raise Infeasible(f"alpha^2 = {alpha_sq:.17g} > 1 at n*={n_star}, delta={delta}")
        alpha = math.sqrt(min(alpha_sq, 1.0))

    probe = noon_vacuum_probe(n_star, alpha)
    gamma = overlap(probe, apply_device(probe, DeviceSpec(delta)))
    achieved = probability(task.mode, gamma)
    log.debug("design delta=%.17g %s q=%.17g: n*=%d alpha=%.17g overlap=%r", delta, task.mode, task.q, n_star, alpha, gamma)

    if achieved > task.q + SATURATION_TOL:
        raise Infeasible(f"Designed probe misses the budget: P={achieved:.17g} > q={task.q:.17g}")

    return DesignResult(
        n_star=n_star,
        alpha=alpha,
        probe=probe,
        energy=alpha * alpha * n_star,
        achieved_overlap=gamma.real,
        achieved_probability=achieved,
        task=task,
        delta=delta,
    )


def achieved_performance(result: DesignResult) -> float:
    gamma = overlap(result.probe, apply_device(result.probe, DeviceSpec(result.delta)))
    return probability(result.task.mode, gamma)


