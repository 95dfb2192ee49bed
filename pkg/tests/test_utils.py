import json
import math

import pytest

from application import ReaderPrefs
from errors import InvalidArgs, OutputError
from tradeoff import TradeoffCurve, TradeoffRow, VerifyRow, fmt_float
from utils import configure_logging, load_prefs, parse_delta, q_grid, save_prefs, write_tradeoff_csv


@pytest.mark.parametrize("text,expected", [
    ("pi/4", math.pi / 4),
    ("pi / 12", math.pi / 12),
    ("PI", math.pi),
    ("3pi/4", 3 * math.pi / 4),
    ("3*pi/4", 3 * math.pi / 4),
    ("0.5", 0.5),
    ("1e-2", 0.01),
])
def test_parse_delta(text, expected):
    assert parse_delta(text) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("text", ["", "pi/0", "pie", "inf", "two"])
def test_parse_delta_rejects(text):
    with pytest.raises(InvalidArgs):
        parse_delta(text)


def test_q_grid_log_and_linear():
    log = q_grid(1e-6, 0.49, 5)
    assert log[0] == 1e-6 and log[-1] == 0.49
    ratios = [b / a for a, b in zip(log, log[1:])]
    assert ratios == pytest.approx([ratios[0]] * 4, rel=1e-12)
    lin = q_grid(0.1, 0.3, 3, linear=True)
    assert lin == pytest.approx([0.1, 0.2, 0.3])


@pytest.mark.parametrize("args", [(0.1, 0.2, 1), (0.0, 0.2, 5), (0.3, 0.2, 5)])
def test_q_grid_rejects(args):
    with pytest.raises(InvalidArgs):
        q_grid(*args)


def test_prefs_defaults_and_round_trip(tmp_path):
    path = tmp_path / "prefs.json"
    assert load_prefs(str(path)) == ReaderPrefs()
    prefs = ReaderPrefs(points=17, baseline="helstrom", seed=3)
    save_prefs(prefs, str(path))
    assert load_prefs(str(path)) == prefs


def test_prefs_malformed_fall_back(tmp_path):
    path = tmp_path / "prefs.json"
    path.write_text(json.dumps({"points": "many", "baseline": "kennedy", "workers": 0, "log_level": "debug"}), encoding="utf-8")
    prefs = load_prefs(str(path))
    assert prefs.points == ReaderPrefs().points
    assert prefs.baseline == "homodyne"
    assert prefs.workers == 1
    assert prefs.log_level == "DEBUG"

    path.write_text("[1, 2", encoding="utf-8")
    assert load_prefs(str(path)) == ReaderPrefs()


def test_save_prefs_unwritable(tmp_path):
    with pytest.raises(OutputError):
        save_prefs(ReaderPrefs(), str(tmp_path))


def test_configure_logging_rejects_unknown_level():
    with pytest.raises(InvalidArgs):
        configure_logging("chatty")


def test_csv_format(tmp_path):
    curve = TradeoffCurve(delta=1.0, mode="unambiguous", rows=[TradeoffRow(0.1, 0.1, 2, 0.5, 0.25)])
    path = tmp_path / "t.csv"
    write_tradeoff_csv(curve, str(path))
    assert path.read_text(encoding="utf-8") == (
        "q,K,n_star,alpha,energy_optimal,energy_coherent_homodyne\n"
        "0.10000000000000001,0.10000000000000001,2,0.5,0.25,nan\n"
    )
    assert curve.is_sorted()


def test_verify_row():
    ok = VerifyRow(q=0.0, K=0.0, energy_closed_form=1.0, energy_oracle=1.0 + 5e-7, tol=1e-6)
    assert ok.passed and ok.line().endswith("PASS")
    under = VerifyRow(q=0.0, K=0.0, energy_closed_form=1.0, energy_oracle=0.9, tol=1e-6)
    assert not under.passed and under.line().endswith("FAIL")
    gap = VerifyRow(q=0.0, K=0.0, energy_closed_form=1.0, energy_oracle=1.1, tol=1e-6)
    assert not gap.passed
    assert fmt_float(math.nan) == "nan"
