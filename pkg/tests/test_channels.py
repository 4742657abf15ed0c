import numpy as np
import pytest

from conftest import random_ket
from hyqent import (CutoffTooSmall, DensityMatrix, HybridState, SymbolicKet,
                    ThermalChannelParams, amplitude_damp, apply_kraus, apply_thermal,
                    beamsplit, choi_state, coherent_ket, compress,
                    concurrence, concurrence_evolution_check, identity_kraus,
                    make_kraus_set, negativity, negativity_evolution_check,
                    qubit_loss_kraus, thermal_dyad_moments, thermal_kraus)
from hyqent.catalog import binary_coherent


def test_amplitude_damp_lossless_and_single_ket():
    st = binary_coherent(1.0).payload
    assert amplitude_damp(st, 1.0) is st
    single = HybridState.pure(2, [(1.0, 0, SymbolicKet.coherent(1.2))])
    out = amplitude_damp(single, 0.5)
    kets = out.kets()
    assert len(kets) == 1
    assert kets[0].alpha == pytest.approx(np.sqrt(0.5) * 1.2)


def test_amplitude_damp_two_projector_weights():
    eta, al = 0.7, 1.1
    out = amplitude_damp(binary_coherent(al).payload, eta)
    tau = np.exp(-2 * (1 - eta) * al**2)
    weights = sorted(p for p, _ in out.terms)
    assert weights == pytest.approx([(1 - tau) / 2, (1 + tau) / 2], abs=1e-12)
    for _, branches in out.terms:
        for b in branches:
            assert abs(b.ket.alpha) == pytest.approx(np.sqrt(eta) * al)


def test_amplitude_damp_against_beamsplitter_oracle():
    """Independent route: couple to vacuum with a beam splitter and trace."""
    eta, al = 0.6, 0.9
    n_cut = 20
    theta = np.arccos(np.sqrt(eta))
    u = beamsplit(theta, n_cut=n_cut)
    dim = n_cut + 1
    psi = (np.kron([1, 0], np.kron(coherent_ket(al, n_cut), coherent_ket(0, n_cut)))
           + np.kron([0, 1], np.kron(coherent_ket(-al, n_cut), coherent_ket(0, n_cut)))) / np.sqrt(2)
    psi = np.kron(np.eye(2), u) @ psi
    full = np.outer(psi, psi.conj()).reshape(2, dim, dim, 2, dim, dim)
    oracle = np.einsum("aijbkj->aibk", full).reshape(2 * dim, 2 * dim)
    out = amplitude_damp(binary_coherent(al).payload, eta)
    ours = out.to_fock_density(n_cut).matrix
    assert np.abs(ours - oracle).max() < 1e-8


def test_amplitude_damp_general_term_route_matches_special_case():
    # an unbalanced two-branch term goes through the environment Gram route
    al, eta = 0.8, 0.55
    st = HybridState.pure(2, [(np.sqrt(0.3), 0, SymbolicKet.coherent(al)),
                              (np.sqrt(0.7), 1, SymbolicKet.coherent(-al))])
    out = amplitude_damp(st, eta)
    # oracle: exact dyad algebra rho'_ij = c_i c_j* <env_j|env_i> |se a_i><se a_j|
    n_cut = 20
    ours = compress(out)
    c = [np.sqrt(0.3), np.sqrt(0.7)]
    amps = [al, -al]
    kets = [coherent_ket(np.sqrt(eta) * a, n_cut) for a in amps]
    rho = np.zeros((2 * (n_cut + 1),) * 2, dtype=complex)
    for i in range(2):
        for j in range(2):
            env = np.exp(-abs(np.sqrt(1 - eta) * amps[i]) ** 2 / 2
                         - abs(np.sqrt(1 - eta) * amps[j]) ** 2 / 2
                         + np.conj(np.sqrt(1 - eta) * amps[j]) * np.sqrt(1 - eta) * amps[i])
            block = c[i] * c[j] * env * np.outer(kets[i], kets[j].conj())
            e_i, e_j = np.zeros(2), np.zeros(2)
            e_i[i] = e_j[j] = 1
            rho += np.kron(np.outer(e_i, e_j), block)
    oracle = out.to_fock_density(n_cut).matrix
    assert np.abs(oracle - rho).max() < 1e-10
    assert abs(np.trace(ours.matrix) - 1.0) < 1e-10


def test_amplitude_damp_concurrence_monotone_in_loss():
    al = 1.0
    values = [concurrence(compress(amplitude_damp(binary_coherent(al).payload, eta)))
              for eta in np.linspace(1.0, 0.05, 12)]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_thermal_dyad_moment_examples():
    params = ThermalChannelParams(0.5, 1.0)
    val = thermal_dyad_moments(-1.0, -1.0, params, (1, 1))
    assert val == pytest.approx(0.5 * 1 + 0.5 * 1.0, abs=1e-14)  # eta|a|^2 + (1-eta) n_th
    ident = ThermalChannelParams(1.0, 3.0)
    # identity channel: <beta|adag^2 a|alpha> = conj(beta)^2 alpha <beta|alpha>
    assert thermal_dyad_moments(0.9, -0.9, ident, (2, 1)) == pytest.approx(
        (-0.9) ** 2 * 0.9 * np.exp(-2 * 0.81), abs=1e-14)


def test_thermal_dyad_moments_match_kraus_numerics():
    al, be = 1.1 + 0.2j, -0.9 + 0.4j
    params = ThermalChannelParams(0.6, 1.3)
    n_cut = 30
    ks = thermal_kraus(params, n_cut)
    ops = np.stack(ks.operators)
    va, vb = coherent_ket(al, n_cut), coherent_ket(be, n_cut)
    ka = np.einsum("kob,b->ko", ops, va)
    kb = np.einsum("kob,b->ko", ops, vb)
    dyad = np.einsum("ka,kb->ab", ka, kb.conj())
    dim = dyad.shape[0]
    a = np.diag(np.sqrt(np.arange(1, dim)), 1)
    for powers in [(0, 0), (1, 1), (0, 1), (2, 1), (2, 2)]:
        word = np.linalg.matrix_power(a.T, powers[0]) @ np.linalg.matrix_power(a, powers[1])
        numeric = np.trace(dyad @ word)
        closed = thermal_dyad_moments(al, be, params, powers)
        assert abs(numeric - closed) < 1e-8, powers


def test_thermal_kraus_completeness_and_reduction():
    params = ThermalChannelParams(2 / 3, 1.0)
    ks = thermal_kraus(params, 20)
    assert ks.completeness_residual < 1e-8
    # n_th = 0 keeps only the amplitude-damping family
    eta = 0.7
    ks0 = thermal_kraus(ThermalChannelParams(eta, 0.0), 12)
    from math import comb
    for m, op in enumerate(ks0.operators):
        expect = np.zeros_like(op)
        for k in range(m, 13):
            expect[k - m, k] = np.sqrt(comb(k, m)) * np.sqrt(eta) ** (k - m) * np.sqrt(1 - eta) ** m
        assert np.abs(op - expect).max() < 1e-10
    with pytest.raises(CutoffTooSmall):
        thermal_kraus(params, 10, n_env_cut=3)


def test_thermal_eta_one_is_identity():
    params = ThermalChannelParams(1.0, 2.0)
    ks = thermal_kraus(params, 10)
    rho = DensityMatrix.from_ket(coherent_ket(0.8, 10, tail_tol=1e-6), (1, 11), norm_tol=1e-5)
    out = apply_kraus(rho, ks, 1)
    assert np.abs(out.matrix[:11, :11] - rho.matrix).max() < 1e-7


def test_thermal_reduces_to_amplitude_damping_at_zero_noise():
    al, eta = 0.9, 0.6
    st = binary_coherent(al).payload
    damped = amplitude_damp(st, eta)
    n_cut = 25
    via_kraus = apply_thermal(st, ThermalChannelParams(eta, 0.0)).truncated_density(n_cut)
    direct = damped.to_fock_density(n_cut)
    assert np.abs(via_kraus.matrix[: 2 * (n_cut + 1), : 2 * (n_cut + 1)]
                  - direct.matrix).max() < 1e-8


def test_apply_kraus_identity_and_qubit_loss():
    rho = DensityMatrix.from_ket(np.array([0, 0, 0, 1.0]), (2, 2))
    out = apply_kraus(rho, identity_kraus(2), 1)
    assert np.abs(out.matrix - rho.matrix).max() < 1e-14
    eta = 0.35
    out = apply_kraus(rho, qubit_loss_kraus(eta), 1)
    # |1><1| on the lossy side becomes eta |1><1| + (1-eta)|0><0|
    expect = np.zeros((4, 4))
    expect[3, 3] = eta
    expect[2, 2] = 1 - eta
    assert np.abs(out.matrix - expect).max() < 1e-12
    with pytest.raises(ValueError):
        apply_kraus(rho, qubit_loss_kraus(eta), 2)


def test_choi_states():
    choi_id = choi_state(identity_kraus(2), 2)
    bell = np.zeros(4)
    bell[0] = bell[3] = 1 / np.sqrt(2)
    assert np.abs(choi_id.matrix - np.outer(bell, bell)).max() < 1e-12
    eta = 0.6
    assert negativity(choi_state(qubit_loss_kraus(eta), 2)) == pytest.approx(eta / 2, abs=1e-12)
    # full depolarization is entanglement breaking: PPT Choi state
    paulis = [np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]),
              np.array([[1, 0], [0, -1]])]
    depol = make_kraus_set([p / 2 for p in paulis])
    assert negativity(choi_state(depol, 2)) == pytest.approx(0.0, abs=1e-12)


def test_concurrence_evolution_equation(rng):
    for eta in (0.3, 0.7):
        ks = qubit_loss_kraus(eta)
        for _ in range(30):
            chi = random_ket(rng, 4)
            lhs, rhs = concurrence_evolution_check(chi, ks)
            assert abs(lhs - rhs) < 1e-10
    bell = np.zeros(4)
    bell[0] = bell[3] = 1 / np.sqrt(2)
    lhs, rhs = concurrence_evolution_check(bell, qubit_loss_kraus(0.5))
    assert abs(lhs - rhs) < 1e-12


def test_negativity_evolution_counterexample():
    w, eta = 0.25, 0.5
    chi = np.array([np.sqrt(w), 0, 0, np.sqrt(1 - w)])
    lhs, rhs = negativity_evolution_check(chi, qubit_loss_kraus(eta))
    assert abs(lhs - rhs) > 1e-3
    # against the closed forms of both sides
    expect_out = (1 - w) / 2 * (np.sqrt((1 - eta) ** 2 + 4 * eta * w / (1 - w)) - (1 - eta))
    assert lhs == pytest.approx(expect_out, abs=1e-12)
    assert rhs == pytest.approx(eta / 2 * np.sqrt(w * (1 - w)), abs=1e-12)


def test_damped_concurrence_closed_form_rederived():
    """The two-projector mixture has C = tau sqrt(1 - lambda^2).

    Verified here against the full Wootters computation of the compressed
    matrix; the independent beam-splitter oracle is exercised in
    test_amplitude_damp_against_beamsplitter_oracle.
    """
    for eta in (0.25, 0.5, 0.8):
        for al in (0.4, 1.0, 1.6):
            got = concurrence(compress(amplitude_damp(binary_coherent(al).payload, eta)))
            tau = np.exp(-2 * (1 - eta) * al**2)
            lam = np.exp(-2 * eta * al**2)
            assert got == pytest.approx(tau * np.sqrt(1 - lam**2), abs=1e-12)
