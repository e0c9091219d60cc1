"""Shared generators and independent oracles for the test suite."""
import numpy as np

from entpoly.qstate import QubitState


def random_amps(rng, size):
    v = rng.normal(size=size) + 1j * rng.normal(size=size)
    return v / np.linalg.norm(v)


def random_state(rng, n):
    return QubitState(n, random_amps(rng, 2**n))


def teleport_oracle(T, gamma, i):
    """Residuals by brute force: expand |phi>|V_i> over all 8 basis kets, then
    project the sender's pair onto each V_k with an explicit double loop."""
    T = np.asarray(T, dtype=complex)
    psi = np.zeros(8, dtype=complex)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                psi[4 * a + 2 * b + c] = gamma[a] * T[i - 1, 2 * b + c]
    out = []
    for k in range(4):
        r = [0j, 0j]
        for c in range(2):
            for pair in range(4):
                r[c] += np.conj(T[k, pair]) * psi[2 * pair + c]
        out.append(np.array(r))
    return out
