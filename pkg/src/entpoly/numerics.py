"""Small fixed-size complex linear algebra.

Scalars are plain Python ``complex``; 2x2 and 4x4 matrices are read-only
``numpy`` arrays of dtype ``complex128``. Every public constructor rejects
NaN and infinity.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import AllZero

#: Relative determinant tolerance, scaled by max(1, ||m||_F^2).
DET_TOL = 1e-10
_ZERO = 1e-15


def as_complex(value) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {value!r}")
    return z


def _as_square(entries, size: int) -> np.ndarray:
    m = np.array(entries, dtype=np.complex128)
    if m.shape != (size, size):
        raise ValueError(f"expected a {size}x{size} matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    m.setflags(write=False)
    return m


def as_mat2(entries) -> np.ndarray:
    return _as_square(entries, 2)


def as_mat4(entries) -> np.ndarray:
    return _as_square(entries, 4)


def adjoint(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def det2(m) -> complex:
    m = np.asarray(m, dtype=np.complex128)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def unitarity_deviation(m) -> float:
    """Max-norm of ``m @ m^dagger - I``."""
    m = np.asarray(m, dtype=np.complex128)
    return float(np.max(np.abs(m @ adjoint(m) - np.eye(m.shape[0]))))


def is_unitary(m, tol: float = 1e-10) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return unitarity_deviation(m) <= tol


def is_scaled_unitary(m, tol: float = 1e-10) -> bool:
    """True when ``m = c * U`` for some unitary ``U`` and real ``c > 0``."""
    m = np.asarray(m, dtype=np.complex128)
    gram = m @ adjoint(m)
    c = gram[0, 0].real
    if c <= tol:
        return False
    return bool(np.max(np.abs(gram / c - np.eye(m.shape[0]))) <= tol)


def is_separable_det(m, tol: float = DET_TOL) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    frob2 = float(np.sum(np.abs(m) ** 2))
    return abs(det2(m)) <= tol * max(1.0, frob2)


def _box_muller(rng: np.random.Generator) -> tuple[float, float]:
    u1 = 1.0 - float(rng.random())  # in (0, 1], keeps log finite
    u2 = float(rng.random())
    r = math.sqrt(-2.0 * math.log(u1))
    theta = 2.0 * math.pi * u2
    return r * math.cos(theta), r * math.sin(theta)


def random_unitary4(seed: int) -> np.ndarray:
    """Deterministic pseudo-random 4x4 unitary.

    Algorithm, fixed so that golden values stay portable:

    1. ``numpy.random.Generator(PCG64(seed))`` yields uniform doubles.
    2. Each entry, in row-major order, takes one Box-Muller pair ``(g0, g1)``
       built from two consecutive uniforms ``u1, u2``:
       ``r = sqrt(-2 ln(1 - u1))``, ``g0 = r cos(2 pi u2)``,
       ``g1 = r sin(2 pi u2)``; the entry is ``(g0 + i g1) / sqrt(2)``.
    3. Columns are orthonormalized by modified Gram-Schmidt, run twice per
       column. The implicit R factor has a real positive diagonal, which is
       the phase convention.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    z = np.empty((4, 4), dtype=np.complex128)
    for r in range(4):
        for c in range(4):
            g0, g1 = _box_muller(rng)
            z[r, c] = complex(g0, g1) / math.sqrt(2.0)

    q = np.zeros((4, 4), dtype=np.complex128)
    for j in range(4):
        v = z[:, j].copy()
        for _ in range(2):
            for k in range(j):
                v = v - np.vdot(q[:, k], v) * q[:, k]
        q[:, j] = v / np.linalg.norm(v)
    q.setflags(write=False)
    return q


def rank1_decompose(m, tol: float = DET_TOL):
    """Split ``m`` as the outer product ``gamma lambda^T`` if it is rank one.

    Returns ``None`` when ``|det m| > tol * max(1, ||m||_F^2)``. The pivot is
    the largest-magnitude entry. The pair is rescaled so both factors have
    equal norm and the largest component of ``gamma`` is real non-negative.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = np.asarray(m, dtype=np.complex128)
    mags = np.abs(m)
    if np.all(mags < _ZERO):
        raise AllZero("all-zero matrix has no canonical rank-1 factorization")
    if not is_separable_det(m, tol):
        return None

    r, c = np.unravel_index(int(np.argmax(mags)), m.shape)
    gamma = m[:, c].copy()
    lam = m[r, :] / m[r, c]

    scale = math.sqrt(np.linalg.norm(lam) / np.linalg.norm(gamma))
    gamma *= scale
    lam /= scale

    lead_at = int(np.argmax(np.abs(gamma)))
    lead = gamma[lead_at]
    phase = lead / abs(lead)
    gamma /= phase
    lam *= phase
    gamma[lead_at] = abs(lead)  # exactly real after the phase division

    gamma.setflags(write=False)
    lam.setflags(write=False)
    return gamma, lam
