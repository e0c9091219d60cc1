"""Multi-qubit state vectors.

Amplitude index = basis bitstring read as a binary integer, leftmost ket
symbol most significant: for two qubits the order is |00>, |01>, |10>, |11>.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadLength, NotNormalized, WrongArity

MAX_QUBITS = 12
NORM_TOL = 1e-10
INV_SQRT2 = math.sqrt(0.5)

# Rows are the Bell states |B1>..|B4> over |00>, |01>, |10>, |11>.
BELL_MATRIX = np.array(
    [
        [INV_SQRT2, 0, 0, INV_SQRT2],
        [INV_SQRT2, 0, 0, -INV_SQRT2],
        [0, INV_SQRT2, INV_SQRT2, 0],
        [0, INV_SQRT2, -INV_SQRT2, 0],
    ],
    dtype=np.complex128,
)
BELL_MATRIX.setflags(write=False)


@dataclass(frozen=True, eq=False)
class QubitState:
    """Normalized amplitude vector of an ``n``-qubit register."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise WrongArity(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != 2**self.n:
            raise BadLength(f"{self.n} qubits need {2**self.n} amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        deficit = abs(1.0 - float(np.sum(np.abs(amps) ** 2)))
        if deficit > NORM_TOL:
            raise NotNormalized(deficit)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __repr__(self):
        return f"QubitState(n={self.n}, amplitudes={self.amplitudes.tolist()})"

    def __len__(self):
        return self.amplitudes.size


def make_state(n: int, amplitudes) -> QubitState:
    return QubitState(n, amplitudes)


def basis_state(bits: str) -> QubitState:
    """Computational basis state from a bitstring such as ``"01"``."""
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return QubitState(len(bits), amps)


def zero_state(n: int) -> QubitState:
    return basis_state("0" * n)


def tensor(a: QubitState, b: QubitState) -> QubitState:
    """``a (x) b`` with ``a``'s qubits leftmost."""
    return QubitState(a.n + b.n, np.kron(a.amplitudes, b.amplitudes))


def bell_state(i: int) -> QubitState:
    if i not in (1, 2, 3, 4):
        raise ValueError(f"Bell index must be 1..4, got {i}")
    return QubitState(2, BELL_MATRIX[i - 1])


def bell_coefficients(vec) -> np.ndarray:
    """Coordinates of an arbitrary (unnormalized) 4-vector in the Bell basis."""
    return np.conj(BELL_MATRIX) @ np.asarray(vec, dtype=np.complex128)


def bell_decompose(s: QubitState) -> tuple[complex, complex, complex, complex]:
    if s.n != 2:
        raise WrongArity(f"Bell decomposition needs 2 qubits, got {s.n}")
    return tuple(complex(d) for d in bell_coefficients(s.amplitudes))


def inner(a: QubitState, b: QubitState) -> complex:
    """<a|b>"""
    if a.n != b.n:
        raise WrongArity(f"qubit counts differ: {a.n} vs {b.n}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def phase_equal(a: QubitState, b: QubitState, tol: float = 1e-10) -> bool:
    """Equality up to a global phase: ``|<a|b>| >= 1 - tol``."""
    return abs(inner(a, b)) >= 1.0 - tol


def normalize(vec) -> np.ndarray:
    vec = np.asarray(vec, dtype=np.complex128)
    return vec / np.linalg.norm(vec)
