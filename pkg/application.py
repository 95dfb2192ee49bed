from dataclasses import dataclass, asdict
from typing import Dict, Any

from constants import (
    BASELINES, DEFAULT_POINTS, DEFAULT_Q_MAX, DEFAULT_Q_MIN,
    DEFAULT_SAMPLES, DEFAULT_SEED, D_MAX_MARGIN, MAX_WORKERS,
)


@dataclass
class ReaderPrefs:
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    d_max_margin: int = D_MAX_MARGIN
    points: int = DEFAULT_POINTS
    q_min: float = DEFAULT_Q_MIN
    q_max: float = DEFAULT_Q_MAX
    linear: bool = False
    baseline: str = "homodyne"  # homodyne / helstrom
    workers: int = MAX_WORKERS
    log_level: str = "WARNING"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> "ReaderPrefs":
        defaults = ReaderPrefs()

        def pick(key: str, cast):
            try:
                return cast(d.get(key, getattr(defaults, key)))
            except (TypeError, ValueError):
                return getattr(defaults, key)

        baseline = str(d.get("baseline", defaults.baseline)).strip().lower()
        return ReaderPrefs(
            seed=pick("seed", int),
            samples=max(0, pick("samples", int)),
            d_max_margin=max(3, pick("d_max_margin", int)),
            points=max(2, pick("points", int)),
            q_min=pick("q_min", float),
            q_max=pick("q_max", float),
            linear=bool(d.get("linear", defaults.linear)),
            baseline=baseline if baseline in BASELINES else defaults.baseline,
            workers=max(1, pick("workers", int)),
            log_level=str(d.get("log_level", defaults.log_level)).strip().upper() or defaults.log_level,
        )
