# two-mode fock states as sparse amplitude tables

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Sequence, TYPE_CHECKING

import numpy as np

from constants import DEFAULT_CUTOFF, NORM_TOL
from errors import CutoffExceeded, ZeroState

if TYPE_CHECKING:
    from device import DeviceSpec


class FockIndex(NamedTuple):
    n: int
    m: int

    @property
    def photons(self) -> int:
        return self.n + self.m

    @property
    def difference(self) -> int:
        return self.n - self.m


@dataclass(frozen=True)
class ProbeState:
    amplitudes: Dict[FockIndex, complex] = field(default_factory=dict)
    cutoff: int = DEFAULT_CUTOFF

    def __post_init__(self):
        if int(self.cutoff) < 0:
            raise CutoffExceeded(f"Cutoff must be non-negative, got {self.cutoff}")
        clean: Dict[FockIndex, complex] = {}
        for key, amp in self.amplitudes.items():
            idx = FockIndex(int(key[0]), int(key[1]))
            if idx.n < 0 or idx.m < 0:
                raise CutoffExceeded(f"Negative photon number in {tuple(idx)}")
            if idx.photons > self.cutoff:
                raise CutoffExceeded(f"|{idx.n},{idx.m}> exceeds cutoff {self.cutoff}")
            amp = complex(amp)
            # absent and zero entries are the same state
            if amp != 0:
                clean[idx] = clean.get(idx, 0j) + amp
        object.__setattr__(self, "amplitudes", clean)
        object.__setattr__(self, "cutoff", int(self.cutoff))

    def __getitem__(self, idx) -> complex:
        return self.amplitudes.get(FockIndex(*idx), 0j)

    def __len__(self) -> int:
        return len(self.amplitudes)

    def indices(self) -> List[FockIndex]:
        return sorted(self.amplitudes)

    def to_rows(self) -> List[List[float]]:
        return [[i.n, i.m, self.amplitudes[i].real, self.amplitudes[i].imag] for i in self.indices()]

    @staticmethod
    def from_rows(rows: Iterable[Sequence[float]], cutoff: int = DEFAULT_CUTOFF) -> "ProbeState":
        amps: Dict[FockIndex, complex] = {}
        for row in rows:
            n, m, re, im = row
            amps[FockIndex(int(n), int(m))] = complex(float(re), float(im))
        return ProbeState(amps, cutoff)

    def _arrays(self):
        idx = self.indices()
        amps = np.array([self.amplitudes[i] for i in idx], dtype=complex)
        diffs = np.array([i.difference for i in idx], dtype=float)
        photons = np.array([i.photons for i in idx], dtype=float)
        return idx, amps, diffs, photons


# constructors
def fock_state(n: int, m: int, cutoff: int = DEFAULT_CUTOFF) -> ProbeState:
    return ProbeState({FockIndex(n, m): 1.0}, max(cutoff, n + m))


def vacuum(cutoff: int = DEFAULT_CUTOFF) -> ProbeState:
    return fock_state(0, 0, cutoff)


def noon(n: int, cutoff: int = DEFAULT_CUTOFF) -> ProbeState:
    # n = 0 collapses to the vacuum
    if n == 0:
        return vacuum(cutoff)
    a = 1.0 / math.sqrt(2.0)
    return ProbeState({FockIndex(0, n): a, FockIndex(n, 0): a}, max(cutoff, n))


# algebra
def norm(state: ProbeState) -> float:
    _, amps, _, _ = state._arrays()
    return float(np.sqrt(np.sum(np.abs(amps) ** 2)))


def is_normalized(state: ProbeState, tol: float = NORM_TOL) -> bool:
    _, amps, _, _ = state._arrays()
    return abs(float(np.sum(np.abs(amps) ** 2)) - 1.0) <= tol


def normalize(state: ProbeState) -> ProbeState:
    nrm = norm(state)
    if nrm == 0.0:
        raise ZeroState("Cannot normalize a state with all amplitudes zero")
    return ProbeState({i: a / nrm for i, a in state.amplitudes.items()}, state.cutoff)


def energy(state: ProbeState) -> float:
    _, amps, _, photons = state._arrays()
    return float(np.sum(np.abs(amps) ** 2 * photons))


def apply_device(state: ProbeState, dev: "DeviceSpec") -> ProbeState:
    # U = exp(i delta (n1 - n2)) is diagonal, so only phases change
    idx, amps, diffs, _ = state._arrays()
    out = amps * np.exp(1j * dev.delta * diffs)
    return ProbeState(dict(zip(idx, out.tolist())), state.cutoff)


def overlap(a: ProbeState, b: ProbeState) -> complex:
    # <a|b>
    shared = set(a.amplitudes) & set(b.amplitudes)
    if not shared:
        return 0j
    keys = sorted(shared)
    left = np.array([a.amplitudes[k] for k in keys], dtype=complex)
    right = np.array([b.amplitudes[k] for k in keys], dtype=complex)
    return complex(np.vdot(left, right))
