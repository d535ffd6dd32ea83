"""Smoke tests for the Python bindings."""

import math

import pytest

floqsim = pytest.importorskip("floqsim")


def test_version():
    assert floqsim.__version__


def test_hamiltonian_block_limits():
    np = pytest.importorskip("numpy")
    model = floqsim.ModelParams(eps0=3.7, delta1=1e-12, delta2=1e-12, j=-2.5)
    h = np.array(floqsim.hamiltonian(model))
    evals = np.linalg.eigvalsh(h)
    assert np.allclose(evals, [-3.7, -1.25, 1.25, 3.7], atol=1e-9)


def test_eigensystem_labels():
    model = floqsim.ModelParams()
    energies, states, labels = floqsim.eigensystem(model)
    assert labels == ["s0", "e-", "e+", "s1"]
    assert energies == sorted(energies)

    flipped = floqsim.ModelParams(j=2.5)
    _, _, labels_pos = floqsim.eigensystem(flipped)
    assert labels_pos == ["s0", "e+", "e-", "s1"]


def test_concurrence_extremes():
    r = 1.0 / math.sqrt(2.0)
    psi = [0.0, r, -r, 0.0]
    bell = [[a * b for b in psi] for a in psi]
    value, lambdas = floqsim.concurrence(bell)
    assert value == pytest.approx(1.0, abs=1e-10)
    assert lambdas[0] == pytest.approx(1.0, abs=1e-10)

    separable = [[0.0] * 4 for _ in range(4)]
    separable[0][0] = 1.0
    value, _ = floqsim.concurrence(separable)
    assert value == pytest.approx(0.0, abs=1e-10)


def test_quasienergies_static_limit():
    model = floqsim.ModelParams()
    drive = floqsim.DriveParams(amplitude=0.0)
    gammas = floqsim.quasienergies(model, drive)
    energies, _, _ = floqsim.eigensystem(model)

    def fold(e):
        g = math.fmod(e + 0.5, 1.0)
        if g < 0.0:
            g += 1.0
        return g - 0.5

    assert sorted(gammas) == pytest.approx(sorted(fold(e) for e in energies),
                                           abs=1e-9)


def test_rate_asymmetry():
    model = floqsim.ModelParams()
    bath = floqsim.BathParams(xi=0.1)
    rates = floqsim.fgr_rates(model, bath)
    assert rates[1][2] > 10.0 * rates[0][2]

    pert = floqsim.fgr_rates_perturbative(model, bath)
    assert pert[1][2] == pytest.approx(rates[1][2], rel=0.05)


def test_bath_functions():
    bath = floqsim.BathParams()
    assert floqsim.spectral_density(1.0, bath) == pytest.approx(
        0.001 * math.exp(-0.1))
    assert floqsim.thermal_weight(0.0, bath) == pytest.approx(
        bath.kappa * bath.temperature)


def test_run_point_steady_entanglement():
    model = floqsim.ModelParams()
    drive = floqsim.DriveParams()
    bath = floqsim.BathParams(xi=0.1)
    record = floqsim.run_point(model, drive, bath, ramp_steps=8)
    assert record["error"] == ""
    assert record["c_inf"] > 0.9
    assert record["populations"][1] > 0.9
