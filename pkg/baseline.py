# coherent-probe baselines; both receivers depend on total energy only, D^2 = 4 E sin^2(delta/2)

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect
from scipy.special import erfc

from discrimination import AMBIGUOUS, ReadingTask, error_probability, threshold_K
from errors import InvalidArgs, InvalidDelta, InvalidThreshold

# inverse bisection stops once the bracket is this tight in energy
ENERGY_XTOL = 1e-13


@dataclass(frozen=True)
class CoherentStrategy:
    energy: float
    delta: float

    def __post_init__(self):
        if not self.energy >= 0.0:
            raise InvalidArgs(f"Coherent energy must be non-negative, got {self.energy}")
        _check_delta(self.delta)

    @property
    def homodyne_error(self) -> float:
        return coherent_homodyne_error(self.energy, self.delta)

    @property
    def helstrom_error(self) -> float:
        return coherent_helstrom_error(self.energy, self.delta)


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not math.isfinite(delta) or delta <= 0.0 or delta > math.pi:
        raise InvalidDelta(f"delta must lie in (0, pi], got {delta}")
    return delta


def _sin_half_sq(delta: float) -> float:
    return math.sin(delta / 2.0) ** 2


def coherent_homodyne_error(energy: float, delta: float) -> float:
    # quadrature along the separation, vacuum variance 1/2, midpoint threshold
    delta = _check_delta(delta)
    if energy < 0.0:
        raise InvalidArgs(f"Coherent energy must be non-negative, got {energy}")
    return 0.5 * float(erfc(math.sqrt(2.0 * energy) * math.sin(delta / 2.0)))


def coherent_overlap(energy: float, delta: float) -> float:
    return math.exp(-2.0 * energy * _sin_half_sq(delta))


def coherent_helstrom_error(energy: float, delta: float) -> float:
    delta = _check_delta(delta)
    if energy < 0.0:
        raise InvalidArgs(f"Coherent energy must be non-negative, got {energy}")
    return error_probability(coherent_overlap(energy, delta))


def coherent_energy_for_error(q: float, delta: float) -> float:
    delta = _check_delta(delta)
    q = float(q)
    if not (0.0 < q < 0.5):
        raise InvalidThreshold(f"q must lie in (0, 1/2), got {q}")

    f = lambda e: coherent_homodyne_error(e, delta) - q
    hi = 1.0
    while f(hi) > 0.0:
        hi *= 2.0
    return float(bisect(f, 0.0, hi, xtol=ENERGY_XTOL, maxiter=400))


def coherent_helstrom_energy_for_error(q: float, delta: float) -> float:
    # Helstrom on coherent outputs: exp(-2 E sin^2(delta/2)) = K
    delta = _check_delta(delta)
    q = float(q)
    if not (0.0 < q < 0.5):
        raise InvalidThreshold(f"q must lie in (0, 1/2), got {q}")
    K = threshold_K(ReadingTask(AMBIGUOUS, q))
    return -math.log(K) / (2.0 * _sin_half_sq(delta))


def simulate_homodyne_error(energy: float, delta: float, shots: int, seed: int, split: float = 0.5) -> float:
    # split: fraction of the energy in mode 1; quadratures have variance 1/2
    delta = _check_delta(delta)
    if not energy >= 0.0:
        raise InvalidArgs(f"Coherent energy must be non-negative, got {energy}")
    if shots < 1:
        raise InvalidArgs(f"shots must be positive, got {shots}")
    if not 0.0 <= split <= 1.0:
        raise InvalidArgs(f"split must lie in [0, 1], got {split}")

    b1 = math.sqrt(energy * split)
    b2 = math.sqrt(energy * (1.0 - split))
    out_i = np.array([b1, b2], dtype=complex)
    out_u = out_i * np.exp(1j * delta * np.array([1.0, -1.0]))

    def quadratures(beta: np.ndarray) -> np.ndarray:
        return math.sqrt(2.0) * np.array([beta[0].real, beta[0].imag, beta[1].real, beta[1].imag])

    mean_i, mean_u = quadratures(out_i), quadratures(out_u)
    sep = mean_u - mean_i
    dist = float(np.linalg.norm(sep))

    rng = np.random.default_rng(seed)
    truth = rng.integers(0, 2, size=shots)
    noise = rng.normal(0.0, math.sqrt(0.5), size=(shots, 4))
    if dist == 0.0:
        # nothing to measure, guess
        guesses = rng.integers(0, 2, size=shots)
        return float(np.mean(guesses != truth))

    direction = sep / dist
    means = np.where(truth[:, None] == 1, mean_u, mean_i)
    samples = means + noise
    midpoint = float(direction @ (mean_i + mean_u) / 2.0)
    decided = (samples @ direction > midpoint).astype(int)
    return float(np.mean(decided != truth))
