import math

import numpy as np
import pytest

from design import (
    DesignResult, achieved_performance, candidate_energy, candidates,
    design_probe, noon_vacuum_probe, solve_x_star,
)
from device import DeviceSpec
from discrimination import AMBIGUOUS, UNAMBIGUOUS, ReadingTask, mode_cap, threshold_K
from errors import DegeneratePhase, InvalidDelta
from fock import apply_device, energy, overlap

E_PI_4 = 3.0 / (1.0 + math.sqrt(2.0) / 2.0)  # 1.757359...
E_PI_12 = 9.0 / (1.0 + math.sqrt(2.0) / 2.0)  # 5.272078...
SWEEP_DELTAS = [math.pi / 12, math.pi / 4, math.pi / 2]


def design(delta, mode, q) -> DesignResult:
    return design_probe(delta, ReadingTask(mode, q))


@pytest.mark.parametrize("delta,expected", [
    (math.pi / 4, 2.96808),
    (math.pi / 12, 8.90423),
    (math.pi, 0.742019),
])
def test_solve_x_star(delta, expected):
    x = solve_x_star(delta)
    assert x > 0.0
    assert x == pytest.approx(expected, abs=1e-4)
    assert abs(delta * x - math.tan(delta * x / 2.0)) < 1e-10


@pytest.mark.parametrize("delta", [0.0, -1.0, 3.2, math.nan])
def test_solve_x_star_rejects(delta):
    with pytest.raises(InvalidDelta):
        solve_x_star(delta)


def test_x_star_is_delta_independent_in_phase():
    t = [solve_x_star(d) * d / 2.0 for d in (0.1, 0.5, 1.0, 2.0, math.pi)]
    assert t == pytest.approx([t[0]] * len(t), abs=1e-14)
    assert math.tan(t[0]) == pytest.approx(2 * t[0], abs=1e-10)


def test_candidate_energy_examples():
    assert candidate_energy(2, math.pi / 4, 0.0) == pytest.approx(2.0, abs=1e-12)
    assert candidate_energy(3, math.pi / 4, 0.0) == pytest.approx(E_PI_4, abs=1e-12)
    with pytest.raises(DegeneratePhase):
        candidate_energy(4, math.pi / 2, 0.0)


def test_candidates():
    assert candidates(math.pi / 4) == [2, 3]
    assert candidates(math.pi / 12) == [8, 9]
    assert candidates(math.pi) == [1]


def test_design_pi_4_perfect():
    r = design(math.pi / 4, AMBIGUOUS, 0.0)
    assert r.n_star == 3
    assert r.alpha == pytest.approx(0.7653668647301796, abs=1e-9)
    assert r.energy == pytest.approx(1.757359, abs=1e-6)
    assert r.achieved_probability == pytest.approx(0.0, abs=1e-9)


def test_design_pi_12_perfect():
    r = design(math.pi / 12, AMBIGUOUS, 0.0)
    assert r.n_star == 9
    assert r.energy == pytest.approx(5.272078, abs=1e-6)
    assert r.energy == pytest.approx(E_PI_12, abs=1e-12)


def test_design_trivial_task_is_vacuum():
    r = design(math.pi / 4, AMBIGUOUS, 0.5)
    assert r.alpha == 0.0
    assert r.energy == 0.0
    assert r.is_vacuum
    assert r.probe[0, 0] == 1.0
    assert achieved_performance(r) == 0.5

    r = design(math.pi / 3, UNAMBIGUOUS, 1.0)
    assert r.energy == 0.0


def test_design_tie_prefers_smaller_n():
    # E(1) = E(2) = 1 at delta = pi/2
    assert design(math.pi / 2, AMBIGUOUS, 0.0).n_star == 1


def test_probe_shape_and_energy():
    r = design(math.pi / 5, UNAMBIGUOUS, 0.2)
    expected = noon_vacuum_probe(r.n_star, r.alpha)
    for idx in expected.indices():
        assert r.probe[idx] == pytest.approx(expected[idx], abs=1e-12)
    assert r.probe.cutoff == r.n_star
    assert r.energy == pytest.approx(r.alpha ** 2 * r.n_star, abs=1e-12)
    assert energy(r.probe) == pytest.approx(r.energy, abs=1e-12)


@pytest.mark.parametrize("mode,q", [(AMBIGUOUS, 0.1), (UNAMBIGUOUS, 0.3)])
def test_achieved_performance(mode, q):
    r = design(math.pi / 4, mode, q)
    assert achieved_performance(r) == pytest.approx(q, abs=1e-9)
    assert achieved_performance(r) == pytest.approx(r.achieved_probability, abs=1e-9)


@pytest.mark.parametrize("mode", [AMBIGUOUS, UNAMBIGUOUS])
@pytest.mark.parametrize("delta", SWEEP_DELTAS)
def test_constraint_saturation(mode, delta):
    for q in np.geomspace(1e-6, 0.49, 200):
        r = design(delta, mode, q)
        gamma = overlap(r.probe, apply_device(r.probe, DeviceSpec(delta)))
        K = threshold_K(ReadingTask(mode, q))
        assert gamma.real == pytest.approx(K, abs=1e-9)
        assert abs(gamma.imag) < 1e-9
        assert gamma.real >= -1e-12
        assert r.achieved_probability <= q + 1e-9


@pytest.mark.parametrize("mode", [AMBIGUOUS, UNAMBIGUOUS])
@pytest.mark.parametrize("delta", [math.pi / 12, math.pi / 4, 2.0])
def test_energy_nonincreasing_in_q(mode, delta):
    qs = np.linspace(0.0, mode_cap(mode), 200)
    energies = [design(delta, mode, q).energy for q in qs]
    assert all(b <= a + 1e-12 for a, b in zip(energies, energies[1:]))
    assert energies[-1] == 0.0


@pytest.mark.parametrize("delta", [math.pi / 12, math.pi / 8, math.pi / 4, math.pi / 2, 3 * math.pi / 4])
def test_perfect_reading_has_finite_energy(delta):
    r = design(delta, AMBIGUOUS, 0.0)
    assert math.isfinite(r.energy)
    assert r.energy > 0.0
    assert r.achieved_probability == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("delta", [math.pi / 12, math.pi / 8, math.pi / 5, math.pi / 4, 1.2, math.pi / 2, 2.5, math.pi])
def test_floor_ceil_contains_integer_minimizer(delta):
    n_star = design(delta, AMBIGUOUS, 0.0).n_star
    best = candidate_energy(n_star, delta, 0.0)
    for n in range(1, math.ceil(solve_x_star(delta)) + 4):
        try:
            e = candidate_energy(n, delta, 0.0)
        except DegeneratePhase:
            continue
        assert best <= e + 1e-12


def test_to_dict():
    d = design(math.pi / 4, AMBIGUOUS, 0.0).to_dict()
    assert set(d) == {"delta", "mode", "q", "K", "n_star", "alpha", "energy", "achieved_probability", "probe"}
    assert d["n_star"] == 3
    assert sorted(row[:2] for row in d["probe"]) == [[0, 0], [0, 3], [3, 0]]
