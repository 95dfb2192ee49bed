# equal-prior discrimination of two pure states

import math
from dataclasses import dataclass
from typing import Any, Dict

from constants import MODES, OVERLAP_HARD_TOL
from errors import InvalidOverlap, InvalidThreshold

AMBIGUOUS = "ambiguous"
UNAMBIGUOUS = "unambiguous"


def mode_cap(mode: str) -> float:
    if mode == AMBIGUOUS:
        return 0.5
    if mode == UNAMBIGUOUS:
        return 1.0
    raise InvalidThreshold(f"Unknown mode {mode!r}, expected one of {', '.join(MODES)}")


@dataclass(frozen=True)
class ReadingTask:
    mode: str
    q: float

    def __post_init__(self):
        cap = mode_cap(self.mode)
        q = float(self.q)
        if not (0.0 <= q <= cap):
            raise InvalidThreshold(f"q must lie in [0, {cap:g}] for {self.mode} reading, got {self.q}")
        object.__setattr__(self, "q", q)

    def to_dict(self) -> Dict[str, Any]:
        return {"mode": self.mode, "q": self.q}

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> "ReadingTask":
        return ReadingTask(mode=str(d.get("mode", AMBIGUOUS)).strip().lower(), q=float(d.get("q", 0.0)))


def _modulus(gamma: complex) -> float:
    g = abs(complex(gamma))
    if g > 1.0 + OVERLAP_HARD_TOL:
        raise InvalidOverlap(f"|overlap| = {g:.17g} exceeds 1")
    return min(g, 1.0)


def error_probability(gamma: complex) -> float:
    g = _modulus(gamma)
    # rationalized form, stable at both ends of [0, 1]
    return 0.5 * g * g / (1.0 + math.sqrt((1.0 - g) * (1.0 + g)))


def failure_probability(gamma: complex) -> float:
    return _modulus(gamma)


def probability(mode: str, gamma: complex) -> float:
    if mode == AMBIGUOUS:
        return error_probability(gamma)
    if mode == UNAMBIGUOUS:
        return failure_probability(gamma)
    raise InvalidThreshold(f"Unknown mode {mode!r}")


def threshold_K(task: ReadingTask) -> float:
    if task.mode == AMBIGUOUS:
        return min(1.0, math.sqrt(4.0 * task.q * (1.0 - task.q)))
    return task.q
