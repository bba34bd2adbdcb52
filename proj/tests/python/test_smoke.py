import math

import numpy as np
import pytest

import xychain


def test_hamiltonian_spectrum():
    h = xychain.build_hamiltonian(4, 0.6, 0.5)
    assert h.shape == (16, 16)
    assert np.allclose(h, h.conj().T)
    evals = np.linalg.eigvalsh(h)
    assert evals[0] == pytest.approx(-3.5620499351813333, abs=1e-12)
    ours, vecs = xychain.eigh(h)
    assert np.allclose(ours, evals, atol=1e-12)
    assert np.allclose(vecs.conj().T @ vecs, np.eye(16), atol=1e-12)


def test_parity_commutes():
    h = xychain.build_hamiltonian(5, 0.3, 0.7)
    p = xychain.build_parity(5)
    assert np.abs(h @ p - p @ h).max() < 1e-12


def test_factorized_state_is_ground_state():
    hf = xychain.factorizing_field(0.6)
    assert hf == pytest.approx(0.8)
    h = xychain.build_hamiltonian(6, 0.6, hf)
    psi = xychain.factorized_state(6, 0.6, 1)
    e0 = np.linalg.eigvalsh(h)[0]
    assert np.vdot(psi, h @ psi).real == pytest.approx(e0, abs=1e-10)
    assert xychain.check_factorization(6, 0.6)["status"] == "pass"


def test_crossings_agree():
    dense = xychain.find_parity_crossings(4, 0.6)
    analytic = xychain.analytic_crossings(4, 0.6)
    assert len(dense) == 2
    assert np.allclose(dense, analytic, atol=1e-7)
    assert dense[-1] == pytest.approx(0.8, abs=1e-6)


def test_sector_energies_match_free_fermions():
    even, odd = xychain.sector_ground_energies(6, 0.6, 0.5)
    assert xychain.analytic_sector_ground_energy(6, 0.6, 0.5, 1) == pytest.approx(even, abs=1e-9)
    assert xychain.analytic_sector_ground_energy(6, 0.6, 0.5, -1) == pytest.approx(odd, abs=1e-9)


def test_ghz_correlations():
    psi = np.zeros(8, dtype=complex)
    psi[0] = psi[7] = 1 / math.sqrt(2)
    rho = np.outer(psi, psi.conj())
    assert xychain.total_information(rho) == pytest.approx(3.0)
    bits, mask = xychain.genuine_total(rho)
    assert bits == pytest.approx(2.0)
    assert mask == 1
    j, d = xychain.genuine_classical_quantum(rho, 1, restarts=2)
    assert j + d == pytest.approx(2.0)


def test_gibbs_and_sweep():
    rho = xychain.gibbs_state(4, 0.6, 0.5, 0.01)
    assert np.trace(rho).real == pytest.approx(1.0)
    records = xychain.run_sweep(4, 0.6, [0.01], h_points=41, threads=1)
    assert len(records) == 41
    assert all(r["error"] is None for r in records)
    assert all(r["genuine_total_bits"] <= r["total_bits"] + 1e-12 for r in records)
    minima = xychain.detect_minima([r["h"] for r in records],
                                   [r["genuine_total_bits"] for r in records])
    assert len([m for m in minima if m[0] < 1.0]) == 2


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        xychain.build_hamiltonian(4, 1.5, 0.5)
    with pytest.raises(ValueError):
        xychain.build_hamiltonian(1, 0.5, 0.5)
    with pytest.raises(ValueError):
        xychain.eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))
