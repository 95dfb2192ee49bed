import os
import csv
import json
import math
import logging
import re
from typing import List, Optional

import numpy as np

from application import ReaderPrefs
from constants import BASELINES, CSV_HEADER, PREFS_FILENAME
from errors import InvalidArgs, OutputError
from tradeoff import TradeoffCurve

log = logging.getLogger(__name__)

_PI_RE = re.compile(r"^\s*(?:(?P<num>[0-9.eE+-]+)\s*\*?\s*)?pi\s*(?:/\s*(?P<den>[0-9.eE+-]+))?\s*$")


# logging
def configure_logging(level: str = "WARNING") -> None:
    # stdout carries command output, logs go to stderr
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise InvalidArgs(f"Unknown log level {level!r}")
    logging.basicConfig(
        level=numeric,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=[logging.StreamHandler()],
        force=True,
    )


# parsing
def parse_delta(text: str) -> float:
    # radians, or pi multiples like pi/12, 3pi/4, 3*pi/4
    s = (text or "").strip().lower()
    if not s:
        raise InvalidArgs("Empty delta")
    m = _PI_RE.match(s)
    try:
        if m:
            num = float(m.group("num")) if m.group("num") else 1.0
            den = float(m.group("den")) if m.group("den") else 1.0
            if den == 0.0:
                raise InvalidArgs(f"Zero denominator in delta {text!r}")
            value = num * math.pi / den
        else:
            value = float(s)
    except ValueError as e:
        raise InvalidArgs(f"Cannot parse delta {text!r}") from e
    if not math.isfinite(value):
        raise InvalidArgs(f"delta must be finite, got {text!r}")
    return value


def q_grid(q_min: float, q_max: float, points: int, linear: bool = False) -> List[float]:
    if points < 2:
        raise InvalidArgs(f"Need at least 2 points, got {points}")
    if not (0.0 < q_min < q_max):
        raise InvalidArgs(f"Need 0 < q-min < q-max, got {q_min}, {q_max}")
    if linear:
        grid = np.linspace(q_min, q_max, points)
    else:
        grid = np.geomspace(q_min, q_max, points)
    # pin the endpoints exactly
    grid[0], grid[-1] = q_min, q_max
    return [float(q) for q in grid]


# tradeoff csv
def write_tradeoff_csv(curve: TradeoffCurve, path: str) -> None:
    header = CSV_HEADER[:-1] + [BASELINES[curve.baseline]]
    try:
        parent = os.path.dirname(os.path.abspath(path))
        os.makedirs(parent, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(header)
            for row in curve.rows:
                w.writerow(row.cells())
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e}") from e
    log.info("Wrote %d rows to %s", len(curve.rows), path)


def read_tradeoff_csv(path: str) -> List[dict]:
    with open(path, "r", newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


# persistence
def prefs_path(path: Optional[str] = None) -> str:
    return path or PREFS_FILENAME


def load_prefs(path: Optional[str] = None) -> ReaderPrefs:
    p = prefs_path(path)
    if not os.path.exists(p):
        return ReaderPrefs()
    try:
        with open(p, "r", encoding="utf-8") as f:
            d = json.load(f)
        if isinstance(d, dict):
            return ReaderPrefs.from_dict(d)
        log.warning("%s does not hold a JSON object, using defaults", p)
    except (OSError, json.JSONDecodeError) as e:
        log.warning("Cannot read %s (%s), using defaults", p, e)
    return ReaderPrefs()


def save_prefs(prefs: ReaderPrefs, path: Optional[str] = None) -> None:
    p = prefs_path(path)
    try:
        with open(p, "w", encoding="utf-8") as f:
            json.dump(prefs.to_dict(), f, indent=2, ensure_ascii=False)
    except OSError as e:
        raise OutputError(f"Cannot write {p}: {e}") from e
