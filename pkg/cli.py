import argparse
import json
import logging
import math
import sys
from typing import List, Optional

from application import ReaderPrefs
from baseline import coherent_homodyne_error, simulate_homodyne_error
from constants import APP_NAME, APP_VERSION, BASELINES, MODES, VERIFY_Q_GRID
from design import design_probe
from device import load_matrix, reduce_pair
from discrimination import ReadingTask, mode_cap
from errors import InvalidArgs, ReaderError
from oracle import min_d_max
from sweepWorker import SweepWorker
from utils import configure_logging, load_prefs, parse_delta, q_grid, save_prefs, write_tradeoff_csv

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qreader",
        description="Minimum-energy quantum probes for reading beamsplitter memories.",
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--prefs", default=None, help="Preferences JSON (default: ./prefs.json if present)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    def device_args(p: argparse.ArgumentParser):
        p.add_argument("--delta", help="Eigenphase in radians or as a fraction of pi, e.g. pi/12")
        p.add_argument("--u1", help="Scattering matrix JSON of the first device")
        p.add_argument("--u2", help="Scattering matrix JSON of the second device")
        p.add_argument("--mode", choices=MODES, default="ambiguous")

    p = sub.add_parser("design", help="Design the optimal probe for one threshold")
    device_args(p)
    p.add_argument("--q", type=float, default=0.0, help="Error (ambiguous) or failure (unambiguous) budget")

    p = sub.add_parser("tradeoff", help="Write the energy / error tradeoff curve as CSV")
    device_args(p)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--q-min", type=float, default=None)
    p.add_argument("--q-max", type=float, default=None)
    p.add_argument("--linear", action="store_true", default=None, help="Linear instead of log-spaced q grid")
    p.add_argument("--baseline", choices=sorted(BASELINES), default=None)
    p.add_argument("--out", default="tradeoff.csv")

    p = sub.add_parser("verify", help="Check the closed form against the brute-force oracle")
    device_args(p)
    p.add_argument("--q", type=float, nargs="+", default=None)
    p.add_argument("--d-max", type=int, default=None, help="Largest photon-number difference searched")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("simulate", help="Monte Carlo of the coherent homodyne receiver")
    p.add_argument("--delta", required=True)
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--shots", type=int, default=1_000_000)
    p.add_argument("--split", type=float, default=0.5, help="Fraction of the energy in mode 1")
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("prefs", help="Print the effective preferences, or save them")
    p.add_argument("--write", action="store_true", help="Write them to the prefs file")

    return parser


# helpers
def resolve_delta(args: argparse.Namespace) -> float:
    if args.delta is not None:
        if args.u1 or args.u2:
            raise InvalidArgs("Give either --delta or --u1/--u2, not both")
        return parse_delta(args.delta)
    if args.u1 and args.u2:
        dev = reduce_pair(load_matrix(args.u1), load_matrix(args.u2))
        log.info("Reduced %s, %s to delta=%.17g", args.u1, args.u2, dev.delta)
        return dev.delta
    raise InvalidArgs("Need --delta or both --u1 and --u2")


def _status(msg: str) -> None:
    log.info(msg)


def _pick(value, default):
    return default if value is None else value


# commands
def cmd_design(args: argparse.Namespace, prefs: ReaderPrefs) -> int:
    delta = resolve_delta(args)
    result = design_probe(delta, ReadingTask(args.mode, args.q))
    print(json.dumps(result.to_dict(), indent=2))
    return EXIT_OK


def cmd_tradeoff(args: argparse.Namespace, prefs: ReaderPrefs) -> int:
    delta = resolve_delta(args)
    points = _pick(args.points, prefs.points)
    q_min = _pick(args.q_min, prefs.q_min)
    q_max = _pick(args.q_max, prefs.q_max)
    if q_max > mode_cap(args.mode):
        raise InvalidArgs(f"q-max={q_max} exceeds the {args.mode} cap {mode_cap(args.mode):g}")
    qs = q_grid(q_min, q_max, points, linear=bool(_pick(args.linear, prefs.linear)))

    worker = SweepWorker(delta, args.mode, workers=prefs.workers, status=_status)
    curve = worker.tradeoff(qs, baseline=_pick(args.baseline, prefs.baseline))
    write_tradeoff_csv(curve, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, prefs: ReaderPrefs) -> int:
    delta = resolve_delta(args)
    if not 0.0 < delta <= math.pi:
        raise InvalidArgs(f"delta must lie in (0, pi], got {delta}")
    qs = args.q if args.q is not None else VERIFY_Q_GRID[args.mode]
    for q in qs:
        ReadingTask(args.mode, q)
    need = min_d_max(delta)
    d_max = _pick(args.d_max, need - 3 + prefs.d_max_margin)
    if d_max < need:
        raise InvalidArgs(f"--d-max {d_max} is below ceil(x*) + 3 = {need}")
    samples = _pick(args.samples, prefs.samples)
    if samples < 0:
        raise InvalidArgs(f"--samples must be non-negative, got {samples}")

    worker = SweepWorker(delta, args.mode, workers=prefs.workers, status=_status)
    rows = worker.verify(qs, d_max, samples, _pick(args.seed, prefs.seed))

    print(f"delta={delta:.17g} mode={args.mode} d_max={d_max} samples={samples}")
    for row in rows:
        print(row.line())
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} PASS")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_simulate(args: argparse.Namespace, prefs: ReaderPrefs) -> int:
    delta = parse_delta(args.delta)
    if args.energy < 0.0:
        raise InvalidArgs(f"--energy must be non-negative, got {args.energy}")
    seed = _pick(args.seed, prefs.seed)
    empirical = simulate_homodyne_error(args.energy, delta, args.shots, seed, split=args.split)
    exact = coherent_homodyne_error(args.energy, delta)
    sigma = math.sqrt(exact * (1.0 - exact) / args.shots)
    print(f"energy={args.energy:.17g} delta={delta:.17g} shots={args.shots} seed={seed}")
    print(f"closed_form={exact:.12f} simulated={empirical:.12f} sigma={sigma:.3e}")
    return EXIT_OK


def cmd_prefs(args: argparse.Namespace, prefs: ReaderPrefs) -> int:
    if args.write:
        save_prefs(prefs, args.prefs)
    print(json.dumps(prefs.to_dict(), indent=2))
    return EXIT_OK


COMMANDS = {
    "design": cmd_design,
    "tradeoff": cmd_tradeoff,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "prefs": cmd_prefs,
}


# main
def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    prefs = load_prefs(args.prefs)
    try:
        configure_logging(args.log_level or prefs.log_level)
        return COMMANDS[args.command](args, prefs)
    except ReaderError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        # unreadable matrix files and similar
        print(f"error: {e}", file=sys.stderr)
        return 2
