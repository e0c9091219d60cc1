import math

import numpy as np
import pytest

from entpoly.errors import NotNormalized, NotUnitary, SingularBranch
from entpoly.numerics import random_unitary4
from entpoly.qstate import QubitState, basis_state, bell_state, normalize, phase_equal
from entpoly.teleport import (
    basis_states,
    bell_basis,
    computational_in_basis,
    correction_gate,
    make_basis,
    teleport_bell,
    teleport_general,
    teleport_poly,
)

from helpers import random_amps, teleport_oracle

S = 1 / math.sqrt(2)
BELL_CORRECTIONS = [
    np.eye(2),
    np.diag([1, -1]),
    np.array([[0, 1], [1, 0]]),
    np.array([[0, 1], [-1, 0]]),
]


def closed_form(g):
    g1, g2 = g
    return [np.array(v) / 2 for v in ((g1, g2), (g1, -g2), (g2, g1), (-g2, g1))]


def proportional(a, b, tol=1e-12):
    pivot = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    ratio = a[pivot] / b[pivot]
    return np.max(np.abs(a - ratio * b)) <= tol


def test_make_basis():
    b = bell_basis()
    assert all(b.entangled)
    for m in b.blocks:
        assert abs(abs(np.linalg.det(m)) - 0.5) < 1e-15
    ident = make_basis(np.eye(4))
    assert not any(ident.entangled)
    with pytest.raises(NotUnitary):
        make_basis(2 * np.eye(4))


def test_basis_states():
    vs = basis_states(bell_basis())
    assert phase_equal(vs[0], bell_state(1), 1e-15)
    for j, v in enumerate(basis_states(make_basis(np.eye(4)))):
        assert np.array_equal(v.amplitudes, basis_state(format(j, "02b")).amplitudes)
    vs = basis_states(make_basis(random_unitary4(3)))
    gram = np.array([[np.vdot(a.amplitudes, b.amplitudes) for b in vs] for a in vs])
    assert np.max(np.abs(gram - np.eye(4))) <= 1e-10


def test_computational_in_basis():
    np.testing.assert_allclose(computational_in_basis(bell_basis(), 1), [S, S, 0, 0], atol=1e-15)
    assert np.array_equal(computational_in_basis(make_basis(np.eye(4)), 3), [0, 0, 1, 0])
    b = make_basis(random_unitary4(9))
    vs = basis_states(b)
    for j in range(1, 5):
        coords = computational_in_basis(b, j)
        back = sum(c * v.amplitudes for c, v in zip(coords, vs))
        assert np.max(np.abs(back - np.eye(4)[j - 1])) <= 1e-12


@pytest.mark.parametrize(
    "gamma, expected",
    [
        ((1, 0), [(0.5, 0), (0.5, 0), (0, 0.5), (0, 0.5)]),
        ((0, 1), [(0, 0.5), (0, -0.5), (0.5, 0), (-0.5, 0)]),
    ],
)
def test_teleport_bell_examples(gamma, expected):
    for br, want in zip(teleport_bell(gamma), expected):
        np.testing.assert_allclose(br.residual, want, atol=1e-15)


def test_teleport_bell_corrections():
    g = np.array([0.6, 0.8j])
    for br, gate in zip(teleport_bell(g), BELL_CORRECTIONS):
        assert proportional(br.correction, gate.astype(complex))
        np.testing.assert_allclose(br.corrected(), g, atol=1e-15)
    with pytest.raises(NotNormalized):
        teleport_bell([1, 1])


def test_teleport_general_bell_specialization():
    rng = np.random.default_rng(8)
    for _ in range(20):
        g = random_amps(rng, 2)
        for gen, want in zip(teleport_general(g, bell_basis(), 1), closed_form(g)):
            assert np.max(np.abs(gen.residual - want)) <= 1e-15


def test_teleport_general_identity_basis():
    g = np.array([0.6, 0.8])
    branches = teleport_general(g, make_basis(np.eye(4)), 1)
    want = [(0.6, 0), (0, 0), (0.8, 0), (0, 0)]
    for br, w in zip(branches, want):
        np.testing.assert_allclose(br.residual, w, atol=0)
    # every branch map for this resource has rank at most one
    assert all(br.correction is None for br in branches)
    for br, w in zip(branches, teleport_oracle(np.eye(4), g, 1)):
        np.testing.assert_allclose(br.residual, w, atol=0)


def test_teleport_general_probability_seed7():
    b = make_basis(random_unitary4(7))
    for i in range(1, 5):
        total = sum(br.probability for br in teleport_general((1, 0), b, i))
        assert abs(total - 1) <= 1e-10


def test_teleport_general_matches_oracle():
    rng = np.random.default_rng(12)
    for seed in range(30):
        T = random_unitary4(seed)
        b = make_basis(T)
        g = random_amps(rng, 2)
        i = int(rng.integers(1, 5))
        for br, want in zip(teleport_general(g, b, i), teleport_oracle(T, g, i)):
            assert np.max(np.abs(br.residual - want)) <= 1e-12
            if br.correction is not None:
                restored = QubitState(1, normalize(br.corrected()))
                assert phase_equal(restored, QubitState(1, g), 1e-10)


def test_correction_gate():
    b = bell_basis()
    for k, gate in enumerate(BELL_CORRECTIONS, start=1):
        assert proportional(correction_gate(b, k, 1), gate.astype(complex))
    for i in range(1, 5):
        assert proportional(correction_gate(b, i, i), np.eye(2, dtype=complex))
    with pytest.raises(SingularBranch):
        correction_gate(make_basis(np.eye(4)), 2, 1)


def test_correction_inverts_branch_map_random():
    rng = np.random.default_rng(13)
    for seed in range(20):
        b = make_basis(random_unitary4(100 + seed))
        g = random_amps(rng, 2)
        for i in range(1, 5):
            for br in teleport_general(g, b, i):
                np.testing.assert_allclose(br.corrected(), g, atol=1e-8)


def test_teleport_poly_bell():
    g = np.array([0.6, 0.8j])
    pairs = teleport_poly(g, bell_basis(), 1)
    for got, want in zip(pairs, closed_form(g)):
        assert np.max(np.abs(np.array(got) - want)) <= 1e-15
    pairs = teleport_poly((1, 0), bell_basis(), 1)
    np.testing.assert_allclose(pairs, [(0.5, 0), (0.5, 0), (0, 0.5), (0, 0.5)], atol=1e-15)


def test_teleport_poly_matches_general_seed11():
    rng = np.random.default_rng(11)
    b = make_basis(random_unitary4(11))
    g = random_amps(rng, 2)
    for i in range(1, 5):
        for br, pair in zip(teleport_general(g, b, i), teleport_poly(g, b, i)):
            assert np.max(np.abs(br.residual - np.array(pair))) <= 1e-12
