"""Smoke tests for the Python bindings.

These are deliberately light: each covers one slice of the bound surface and
checks a value the C++ test suite already pins down precisely.
"""

import json
import math

import numpy as np
import pytest

import kappajc as kj


def unit_params(epsilon=5e-4):
    p = kj.ModelParams()
    p.mass = 1.0
    p.c = 1.0
    p.hbar = 1.0
    p.omega = 1.0
    p.epsilon = epsilon
    p.s = 1
    p.branch = kj.Branch.jc
    return p


def test_version_and_repr():
    assert kj.__version__ == "0.1.0"
    assert "jc" in repr(unit_params())


def test_params_derived_quantities():
    p = unit_params()
    assert p.mc2() == 1.0
    assert p.xi() == 1.0
    g = p.coupling_g()
    assert g.real == 0.0 and g.imag == pytest.approx(2.0)
    assert p.delta_eps() == pytest.approx(1.0 - 2.0 * 5e-4)
    assert p.identity_coefficient() == pytest.approx(-2.0 * 5e-4)
    p.validate()


def test_closed_form_spectrum():
    p = unit_params()
    assert kj.energy_undeformed(0, +1, p) == pytest.approx(math.sqrt(5.0))
    assert kj.energy_undeformed(3, +1, p) == pytest.approx(math.sqrt(17.0))
    gap = kj.deformation_gap(0, p)
    assert gap == pytest.approx(4.0 * 5e-4)
    # Mirror identity: the deformed towers sum to -2 * gap.
    total = kj.energy_deformed(2, +1, p) + kj.energy_deformed(2, -1, p)
    assert total == pytest.approx(-2.0 * kj.deformation_gap(2, p), abs=1e-12)


def test_hamiltonian_and_numeric_spectrum():
    p = unit_params()
    h = kj.build_kappa(p, 24)
    assert isinstance(h, np.ndarray)
    assert h.shape == (50, 50)
    assert h.dtype == np.complex128
    report = kj.numeric_vs_closed(h, p, 10)
    assert report.max_abs_err < 1e-6
    assert report.max_imag < 1e-10
    assert len(report.rows) > 0
    # Undeformed limit reduces to the Hermitian model exactly.
    p0 = p.with_epsilon(0.0)
    assert np.max(np.abs(kj.build_kappa(p0, 20) - kj.build_jc(p0, 20))) == 0.0


def test_metric_bundle():
    p = unit_params()
    bundle = kj.build_rho(p, 60)
    assert bundle.min_eta_eigenvalue > 0.9
    h = kj.build_kappa(p, 60)
    assert kj.quasi_residual(h, bundle, 10) < 1e-5
    phi = kj.initial_state_vector(kj.InitialState.coherent(4.0), 60)
    lhs, rhs = kj.expectation_equiv(h, bundle, phi)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_symmetry_verdicts():
    rep = kj.audit_symmetries(unit_params())
    assert not rep.pt_invariant
    assert rep.p_sigma_z_invariant
    assert rep.t_sigma_x_flips_chirality
    assert rep.note


def test_simulate_fock_additivity():
    p = unit_params()
    grid = kj.linear_grid(3.0 * 2.0 * math.pi / math.sqrt(5.0), 120)
    ts = kj.simulate(p, kj.InitialState.fock(3), grid, kj.Method.numeric, 24)
    sz = np.asarray(ts.sz)
    lz = np.asarray(ts.lz)
    jz = np.asarray(ts.jz)
    assert sz[0] == pytest.approx(0.5, abs=1e-12)
    assert lz[0] == pytest.approx(3.0, abs=1e-12)
    assert np.max(np.abs(sz + lz - jz)) < 1e-10
    assert not ts.clipped_satellites


def test_closed_vs_numeric_evolution():
    p = unit_params()
    grid = kj.linear_grid(2.0 * math.pi / math.sqrt(5.0), 40)
    closed = kj.simulate(p, kj.InitialState.fock(2), grid, kj.Method.closed, 24)
    numeric = kj.simulate(p, kj.InitialState.fock(2), grid, kj.Method.numeric, 24)
    dev = np.max(np.abs(np.asarray(closed.sz) - np.asarray(numeric.sz)))
    assert dev < 0.05


def test_config_round_trip_and_audit_json():
    cfg = kj.RunConfig()
    cfg.params = unit_params()
    cfg.n_max = 80
    cfg.margin = 10
    cfg.points = 150
    again = kj.run_config_from_json(kj.run_config_to_json(cfg))
    assert again == cfg
    doc = json.loads(kj.run_audit_json(cfg))
    assert doc["identity_coefficient"]["verdict"] == "consistent"
    assert doc["transformed_eigenstates"]["min_fidelity"] >= 1.0 - 1e-6
    assert doc["expectation_equivalence_max_rel"] <= 1e-10


def test_propagator_numpy_interop():
    p = unit_params()
    bundle = kj.build_rho(p, 30)
    h = 0.5 * (lambda m: m + m.conj().T)(kj.hermitize(kj.build_kappa(p, 30), bundle))
    prop = kj.SpectralPropagator(h, 1.0)
    psi0 = kj.initial_state_vector(kj.InitialState.fock(1), 30)
    psi_t = prop.evolve(psi0, 0.7)
    assert np.linalg.norm(psi_t) == pytest.approx(1.0, abs=1e-10)
    assert prop.eigenvalues().shape == (62,)
