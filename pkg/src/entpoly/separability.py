"""Two-qubit separability by the coefficient-matrix determinant.

A state c1|00> + c2|01> + c3|10> + c4|11> is a product state exactly when
A = [[c1, c2], [c3, c4]] has zero determinant; the same test decides whether
c1 + c2 x + c3 y + c4 xy splits as Q1(x) Q2(y).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AllZero, BadArity, WrongArity
from .mpoly import MultilinearPoly
from .numerics import DET_TOL, as_mat2, det2, rank1_decompose
from .qstate import QubitState


@dataclass(frozen=True)
class SeparabilityVerdict:
    det: complex
    entangled: bool
    factors: Optional[tuple[QubitState, QubitState]] = None


def coefficient_matrix(s: QubitState) -> np.ndarray:
    if s.n != 2:
        raise WrongArity(f"coefficient matrix needs a 2-qubit state, got {s.n}")
    return as_mat2(s.amplitudes.reshape(2, 2))


def classify(s: QubitState, tol: float = DET_TOL) -> SeparabilityVerdict:
    a = coefficient_matrix(s)
    d = det2(a)
    split = rank1_decompose(a, tol)
    if split is None:
        return SeparabilityVerdict(d, True, None)
    gamma, lam = split
    # a normalized state has ||gamma|| ||lambda|| = 1, and the two norms are equal
    return SeparabilityVerdict(d, False, (QubitState(1, gamma), QubitState(1, lam)))


def factor_bilinear(p: MultilinearPoly, tol: float = DET_TOL):
    """Split ``p(x, y)`` into ``(Q1(x), Q2(y))`` or return None.

    The coefficient of xy sits at index 3, x at 1, y at 2, so with
    ``A = [[c0, c1], [c2, c3]]`` the factorization ``A = u v^T`` gives
    ``Q2(y) = u0 + u1 y`` and ``Q1(x) = v0 + v1 x``.
    """
    if p.nvars != 2:
        raise BadArity(f"bilinear factorization needs 2 variables, got {p.nvars}")
    if np.all(np.abs(p.coeffs) < 1e-15):
        raise AllZero("the zero polynomial has no canonical factorization")
    split = rank1_decompose(p.coeffs.reshape(2, 2), tol)
    if split is None:
        return None
    u, v = split
    return MultilinearPoly(1, v), MultilinearPoly(1, u)
