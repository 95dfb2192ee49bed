import math
from dataclasses import dataclass, field
from typing import List


@dataclass
class TradeoffRow:
    q: float
    K: float
    n_star: int
    alpha: float
    energy_optimal: float
    energy_coherent: float = math.nan  # nan in unambiguous mode

    def cells(self) -> List[str]:
        return [fmt_float(self.q), fmt_float(self.K), str(self.n_star), fmt_float(self.alpha),
                fmt_float(self.energy_optimal), fmt_float(self.energy_coherent)]


@dataclass
class TradeoffCurve:
    delta: float
    mode: str
    baseline: str = "homodyne"
    rows: List[TradeoffRow] = field(default_factory=list)

    def is_sorted(self) -> bool:
        return all(a.q <= b.q for a, b in zip(self.rows, self.rows[1:]))


@dataclass
class VerifyRow:
    q: float
    K: float
    energy_closed_form: float
    energy_oracle: float
    tol: float

    @property
    def gap(self) -> float:
        return self.energy_oracle - self.energy_closed_form

    @property
    def passed(self) -> bool:
        return self.energy_oracle >= self.energy_closed_form - self.tol and self.gap <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"q={fmt_float(self.q)} K={fmt_float(self.K)} closed_form={self.energy_closed_form:.12f} "
                f"oracle={self.energy_oracle:.12f} gap={self.gap:+.3e} {status}")


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    return f"{x:.17g}"
