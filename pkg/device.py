import cmath
import json
import logging
import math
from dataclasses import dataclass
from typing import Any, List

import numpy as np

from constants import DET_TOL, UNITARY_TOL
from errors import InvalidArgs, InvalidDelta, NotUnitary, NotUnitDeterminant

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeviceSpec:
    delta: float

    def __post_init__(self):
        d = float(self.delta)
        if not math.isfinite(d) or d < 0.0 or d > math.pi:
            raise InvalidDelta(f"delta must lie in [0, pi], got {self.delta}")
        object.__setattr__(self, "delta", d)


@dataclass(frozen=True)
class ScatteringMatrix:
    a: complex
    b: complex
    c: complex
    d: complex

    @property
    def array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @staticmethod
    def from_array(arr) -> "ScatteringMatrix":
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != (2, 2):
            raise InvalidArgs(f"Scattering matrix must be 2x2, got shape {arr.shape}")
        return ScatteringMatrix(complex(arr[0, 0]), complex(arr[0, 1]), complex(arr[1, 0]), complex(arr[1, 1]))

    # json: [[re, im], [re, im], [re, im], [re, im]], row-major
    @staticmethod
    def from_json(data: Any) -> "ScatteringMatrix":
        if not isinstance(data, list) or len(data) != 4:
            raise InvalidArgs("Scattering matrix JSON must be an array of 4 [re, im] pairs")
        entries: List[complex] = []
        for item in data:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise InvalidArgs(f"Bad matrix entry {item!r}, expected [re, im]")
            try:
                entries.append(complex(float(item[0]), float(item[1])))
            except (TypeError, ValueError) as e:
                raise InvalidArgs(f"Bad matrix entry {item!r}: {e}") from e
        return ScatteringMatrix(*entries)

    def to_json(self) -> List[List[float]]:
        return [[z.real, z.imag] for z in (self.a, self.b, self.c, self.d)]

    def is_unitary(self, tol: float = UNITARY_TOL) -> bool:
        m = self.array
        return bool(np.max(np.abs(m.conj().T @ m - np.eye(2))) <= tol)


def identity() -> ScatteringMatrix:
    return ScatteringMatrix(1, 0, 0, 1)


def beamsplitter(theta: float, phi: float = 0.0) -> ScatteringMatrix:
    # lossless SU(2), transmissivity cos^2(theta)
    c, s = math.cos(theta), math.sin(theta)
    e = cmath.exp(1j * phi)
    return ScatteringMatrix(c, -e.conjugate() * s, e * s, c)


def load_matrix(path: str) -> ScatteringMatrix:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidArgs(f"{path}: invalid JSON ({e})") from e
    return ScatteringMatrix.from_json(data)


def reduce_pair(u1: ScatteringMatrix, u2: ScatteringMatrix) -> DeviceSpec:
    for name, u in (("U1", u1), ("U2", u2)):
        if not u.is_unitary():
            raise NotUnitary(f"{name} is not unitary within {UNITARY_TOL:g}")

    # U1^-1 = U1^dagger for unitaries
    m = u1.array.conj().T @ u2.array
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det - 1.0) > DET_TOL:
        raise NotUnitDeterminant(
            f"det(U1^-1 U2) = {det.real:.6g}{det.imag:+.6g}j, spectrum is not of the form e^(+-i delta)"
        )

    # eigenvalues e^(+-i delta) have trace 2 cos(delta)
    half_trace = float(np.clip((m[0, 0] + m[1, 1]).real / 2.0, -1.0, 1.0))
    delta = math.acos(half_trace)
    log.debug("reduced pair: trace/2=%.17g delta=%.17g", half_trace, delta)
    return DeviceSpec(delta)


def eigenphase(dev: DeviceSpec) -> float:
    return dev.delta

