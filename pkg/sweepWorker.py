import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

from baseline import coherent_energy_for_error, coherent_helstrom_energy_for_error
from constants import BASELINES, DEFAULT_SAMPLES, DEFAULT_SEED, MAX_WORKERS, ORACLE_TOL
from design import design_probe
from discrimination import AMBIGUOUS, ReadingTask
from errors import InvalidArgs
from oracle import brute_force_search
from tradeoff import TradeoffCurve, TradeoffRow, VerifyRow

log = logging.getLogger(__name__)

COHERENT_INVERSES = {
    "homodyne": coherent_energy_for_error,
    "helstrom": coherent_helstrom_energy_for_error,
}


# sweep worker
class SweepWorker:
    def __init__(self, delta: float, mode: str, workers: int = MAX_WORKERS,
                 status: Optional[Callable[[str], None]] = None):
        self.delta = delta
        self.mode = mode
        self.workers = max(1, int(workers))
        self.status = status or (lambda _msg: None)

    def _map(self, fn, qs: List[float]) -> list:
        # executor.map yields in submission order, so rows stay in q order
        with ThreadPoolExecutor(max_workers=self.workers) as ex:
            out = []
            for i, item in enumerate(ex.map(fn, qs), 1):
                out.append(item)
                if i % 50 == 0 or i == len(qs):
                    self.status(f"{i}/{len(qs)} grid points")
            return out

    def _tradeoff_row(self, q: float, baseline: str) -> TradeoffRow:
        result = design_probe(self.delta, ReadingTask(self.mode, q))
        coherent = math.nan
        # the coherent comparison exists for ambiguous reading only
        if self.mode == AMBIGUOUS:
            # a coin flip already meets q = 1/2
            coherent = 0.0 if q >= 0.5 else COHERENT_INVERSES[baseline](q, self.delta)
        return TradeoffRow(
            q=q,
            K=result.K,
            n_star=result.n_star,
            alpha=result.alpha,
            energy_optimal=result.energy,
            energy_coherent=coherent,
        )

    def tradeoff(self, qs: List[float], baseline: str = "homodyne") -> TradeoffCurve:
        if baseline not in BASELINES:
            raise InvalidArgs(f"Unknown baseline {baseline!r}")
        qs = sorted(qs)
        self.status(f"Tradeoff: delta={self.delta:.6g}, {self.mode}, {len(qs)} points")
        rows = self._map(lambda q: self._tradeoff_row(q, baseline), qs)
        return TradeoffCurve(delta=self.delta, mode=self.mode, baseline=baseline, rows=rows)

    def _verify_row(self, q: float, d_max: int, samples: int, seed: int) -> VerifyRow:
        result = design_probe(self.delta, ReadingTask(self.mode, q))
        # the oracle parallelises internally, keep it single-threaded here
        report = brute_force_search(self.delta, result.K, d_max, samples, seed, workers=1)
        log.info("verify q=%.6g: closed form %.12f, oracle %.12f", q, result.energy, report.best)
        return VerifyRow(q=q, K=result.K, energy_closed_form=result.energy,
                         energy_oracle=report.best, tol=ORACLE_TOL)

    def verify(self, qs: List[float], d_max: int, samples: int = DEFAULT_SAMPLES,
               seed: int = DEFAULT_SEED) -> List[VerifyRow]:
        self.status(f"Verify: delta={self.delta:.6g}, {self.mode}, {len(qs)} thresholds, d_max={d_max}")
        return self._map(lambda q: self._verify_row(q, d_max, samples, seed), list(qs))

