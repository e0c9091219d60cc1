"""Teleportation branch algebra over Bell and general entangled resources.

The sender holds |phi> = g1|0> + g2|1> and shares a two-qubit resource V_i
(row i of a unitary T) with the receiver. Measuring the sender's pair in the
V_k basis leaves the receiver with residual (M_k* M_i)^T (g1, g2), where
M_k = [[a_k1, a_k2], [a_k3, a_k4]] and * is the entrywise conjugate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NotNormalized, NotUnitary, SingularBranch
from .mpoly import MultilinearPoly, poly_product, regroup_in_basis
from .numerics import as_mat2, as_mat4, det2, is_scaled_unitary, unitarity_deviation
from .qstate import BELL_MATRIX, NORM_TOL, QubitState, bell_coefficients, tensor

UNITARY_TOL = 1e-10
SINGULAR_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class EntangledBasis:
    T: np.ndarray
    blocks: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    entangled: tuple[bool, bool, bool, bool]


@dataclass(frozen=True, eq=False)
class TeleportBranch:
    outcome: int
    residual: np.ndarray
    correction: Optional[np.ndarray]

    @property
    def probability(self) -> float:
        return float(np.sum(np.abs(self.residual) ** 2))

    def corrected(self) -> np.ndarray:
        """Correction applied to the residual, or None for a singular branch."""
        if self.correction is None:
            return None
        return self.correction @ self.residual


def make_basis(T) -> EntangledBasis:
    T = as_mat4(T)
    dev = unitarity_deviation(T)
    if dev > UNITARY_TOL:
        raise NotUnitary(dev)
    blocks = tuple(as_mat2(T[i].reshape(2, 2)) for i in range(4))
    flags = tuple(abs(det2(m)) > SINGULAR_TOL for m in blocks)
    return EntangledBasis(T, blocks, flags)


def bell_basis() -> EntangledBasis:
    return make_basis(BELL_MATRIX)


def basis_states(b: EntangledBasis) -> list[QubitState]:
    return [QubitState(2, b.T[i]) for i in range(4)]


def computational_in_basis(b: EntangledBasis, j: int) -> tuple[complex, complex, complex, complex]:
    """Coordinates of |C_j> in the V_k basis: column j of conj(T)."""
    return tuple(complex(v) for v in np.conj(b.T[:, j - 1]))


def _check_gamma(gamma) -> np.ndarray:
    g = np.array(gamma, dtype=np.complex128).reshape(-1)
    if g.size != 2:
        raise ValueError(f"gamma must be a pair, got {g.size} values")
    deficit = abs(1.0 - float(np.sum(np.abs(g) ** 2)))
    if deficit > NORM_TOL:
        raise NotNormalized(deficit, "gamma")
    return g


def branch_map(b: EntangledBasis, k: int, i: int) -> np.ndarray:
    """G = (M_k* M_i)^T, the map from gamma to the k-th residual."""
    return (np.conj(b.blocks[k - 1]) @ b.blocks[i - 1]).T


def correction_gate(b: EntangledBasis, k: int, i: int) -> np.ndarray:
    """Exact inverse of the branch map G.

    For blocks that are multiples of unitaries (Bell-like resources) the
    inverse is also checked to be proportional to M_k conj(M_i).
    """
    g = branch_map(b, k, i)
    d = det2(g)
    if abs(d) <= SINGULAR_TOL:
        raise SingularBranch(f"branch k={k} for resource i={i} is singular (det {abs(d):.3e})")
    inv = np.array([[g[1, 1], -g[0, 1]], [-g[1, 0], g[0, 0]]]) / d
    mk, mi = b.blocks[k - 1], b.blocks[i - 1]
    if is_scaled_unitary(mk) and is_scaled_unitary(mi):
        closed = mk @ np.conj(mi)
        pivot = np.unravel_index(np.argmax(np.abs(closed)), closed.shape)
        ratio = inv[pivot] / closed[pivot]
        if np.max(np.abs(inv - ratio * closed)) > 1e-9 * max(1.0, abs(ratio)):
            raise ArithmeticError("inverse branch map is not proportional to M_k conj(M_i)")
    return as_mat2(inv)


def _branch(b: EntangledBasis, k: int, i: int, residual: np.ndarray) -> TeleportBranch:
    try:
        corr = correction_gate(b, k, i)
    except SingularBranch:
        corr = None
    residual = np.asarray(residual, dtype=np.complex128)
    residual.setflags(write=False)
    return TeleportBranch(k, residual, corr)


def teleport_general(gamma, b: EntangledBasis, i: int) -> list[TeleportBranch]:
    g = _check_gamma(gamma)
    return [_branch(b, k, i, branch_map(b, k, i) @ g) for k in range(1, 5)]


def teleport_bell(gamma) -> list[TeleportBranch]:
    """Branches for the |B1> resource, by projecting |phi>|B1> onto the Bell basis.

    The sender's pair (the two leftmost qubits) is expanded in the Bell basis
    separately for each value of the receiver's qubit.
    """
    g = _check_gamma(gamma)
    joint = tensor(QubitState(1, g), QubitState(2, BELL_MATRIX[0]))
    by_receiver = joint.amplitudes.reshape(4, 2)
    residuals = np.column_stack([bell_coefficients(by_receiver[:, c]) for c in range(2)])
    b = bell_basis()
    return [_branch(b, k, 1, residuals[k - 1]) for k in range(1, 5)]


def resource_polys(b: EntangledBasis) -> list[MultilinearPoly]:
    """R_i(x, y) = a_i1 + a_i2 x + a_i3 y + a_i4 xy."""
    return [MultilinearPoly(2, b.T[i]) for i in range(4)]


def teleport_poly(gamma, b: EntangledBasis, i: int) -> list[tuple[complex, complex]]:
    """Residuals from the polynomial side: regroup Q(z) R_i(x, y) over R_k(y, z)."""
    g = _check_gamma(gamma)
    q = MultilinearPoly(1, g)  # Q(z) = g1 + g2 z, local variable renamed to z
    rs = resource_polys(b)
    product = poly_product(q, rs[i - 1], (2,), (0, 1))
    return regroup_in_basis(product, rs)
