"""Multilinear polynomials over ordered variables x, y, z, v3, ...

Coefficient ``m`` belongs to the monomial whose variables are the set bits of
``m`` (bit 0 = x, bit 1 = y, bit 2 = z). A state's basis ket maps to the
monomial with the same index, so the rightmost ket symbol becomes x:
c1|00> + c2|01> + c3|10> + c4|11>  <->  c1 + c2 x + c3 y + c4 xy.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadArity, BadLength, NotNormalized, SingularBasis, VariableCollision
from .qstate import INV_SQRT2, MAX_QUBITS, NORM_TOL, QubitState

VAR_NAMES = ("x", "y", "z")
SINGULAR_TOL = 1e-10

#: A VarMap sends a polynomial's local variable ``j`` to ``varmap[j]``.
VarMap = tuple


def var_name(j: int) -> str:
    return VAR_NAMES[j] if j < len(VAR_NAMES) else f"v{j}"


def monomial_name(m: int) -> str:
    names = [var_name(j) for j in range(m.bit_length()) if m >> j & 1]
    return "".join(names) if all(len(s) == 1 for s in names) else "*".join(names)


@dataclass(frozen=True, eq=False)
class MultilinearPoly:
    nvars: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not 1 <= self.nvars <= MAX_QUBITS:
            raise BadArity(f"variable count must be in 1..{MAX_QUBITS}, got {self.nvars}")
        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if c.size != 2**self.nvars:
            raise BadLength(f"{self.nvars} variables need {2**self.nvars} coefficients, got {c.size}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __repr__(self):
        return f"MultilinearPoly(nvars={self.nvars}, coeffs={self.coeffs.tolist()})"

    def __str__(self):
        return format_poly(self)

    def __call__(self, *point):
        return evaluate(self, point)

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) <= tol))


def _fmt_coeff(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:.12g}"
    if c.real == 0:
        return f"{c.imag:.12g}j"
    return f"({c.real:.12g}{c.imag:+.12g}j)"


def format_poly(p: MultilinearPoly, tol: float = 0.0) -> str:
    """Nonzero terms in index order: 1, x, y, xy, z, xz, yz, xyz, ..."""
    terms = []
    for m, c in enumerate(p.coeffs):
        if abs(c) <= tol:
            continue
        coeff = _fmt_coeff(complex(c))
        terms.append(coeff if m == 0 else f"{coeff}*{monomial_name(m)}")
    return " + ".join(terms) if terms else "0"


def poly_from_terms(nvars: int, terms: dict[str, complex]) -> MultilinearPoly:
    """Build from ``{"1": c0, "x": c1, "xy": c3, ...}`` (only x, y, z names)."""
    coeffs = np.zeros(2**nvars, dtype=np.complex128)
    for name, c in terms.items():
        m = 0 if name == "1" else sum(1 << VAR_NAMES.index(ch) for ch in name)
        coeffs[m] += c
    return MultilinearPoly(nvars, coeffs)


def state_to_poly(s: QubitState) -> MultilinearPoly:
    return MultilinearPoly(s.n, s.amplitudes)


def poly_to_state(p: MultilinearPoly) -> QubitState:
    deficit = abs(1.0 - float(np.sum(np.abs(p.coeffs) ** 2)))
    if deficit > NORM_TOL:
        raise NotNormalized(deficit, "polynomial coefficient vector")
    return QubitState(p.nvars, p.coeffs)


def evaluate(p: MultilinearPoly, point: Sequence) -> complex:
    if len(point) != p.nvars:
        raise BadArity(f"polynomial has {p.nvars} variables, point has {len(point)}")
    total = 0j
    for m, c in enumerate(p.coeffs):
        term = complex(c)
        for j in range(p.nvars):
            if m >> j & 1:
                term *= point[j]
        total += term
    return total


def ket_varmaps(left_nvars: int, right_nvars: int) -> tuple[VarMap, VarMap]:
    """VarMaps matching ``tensor(left, right)``: the right factor keeps x, y, ..."""
    right = tuple(range(right_nvars))
    left = tuple(range(right_nvars, right_nvars + left_nvars))
    return left, right


def _check_varmap(vm: VarMap, nvars: int) -> None:
    if len(vm) != nvars:
        raise BadArity(f"VarMap has {len(vm)} entries for {nvars} variables")
    if len(set(vm)) != len(vm) or any(v < 0 for v in vm):
        raise BadArity(f"VarMap {vm} is not injective onto non-negative indices")


def _remap_index(m: int, vm: VarMap) -> int:
    out = 0
    for j, target in enumerate(vm):
        if m >> j & 1:
            out |= 1 << target
    return out


def remap(p: MultilinearPoly, vm: VarMap, nvars: int) -> MultilinearPoly:
    """Rename ``p``'s variables into an ``nvars``-variable polynomial."""
    _check_varmap(vm, p.nvars)
    coeffs = np.zeros(2**nvars, dtype=np.complex128)
    for m, c in enumerate(p.coeffs):
        coeffs[_remap_index(m, vm)] = c
    return MultilinearPoly(nvars, coeffs)


def poly_product(
    p: MultilinearPoly,
    q: MultilinearPoly,
    pvars: VarMap | None = None,
    qvars: VarMap | None = None,
) -> MultilinearPoly:
    """Product of polynomials over disjoint variable sets.

    Without explicit maps, ``p`` plays the left ket factor and ``q`` the right,
    so ``state_to_poly(tensor(a, b)) == poly_product(state_to_poly(a), state_to_poly(b))``.
    """
    if pvars is None or qvars is None:
        default_p, default_q = ket_varmaps(p.nvars, q.nvars)
        pvars = default_p if pvars is None else tuple(pvars)
        qvars = default_q if qvars is None else tuple(qvars)
    _check_varmap(pvars, p.nvars)
    _check_varmap(qvars, q.nvars)
    if set(pvars) & set(qvars):
        raise VariableCollision(f"variables {sorted(set(pvars) & set(qvars))} appear in both factors")

    nvars = max(pvars + qvars) + 1
    coeffs = np.zeros(2**nvars, dtype=np.complex128)
    for mp, cp in enumerate(p.coeffs):
        if cp == 0:
            continue
        ip = _remap_index(mp, pvars)
        for mq, cq in enumerate(q.coeffs):
            coeffs[ip | _remap_index(mq, qvars)] += cp * cq
    return MultilinearPoly(nvars, coeffs)


def regroup_in_basis(p: MultilinearPoly, basis: Sequence[MultilinearPoly]) -> list[tuple[complex, complex]]:
    """Rewrite ``p(x, y, z)`` as ``sum_k basis_k(y, z) * (alpha_k + beta_k x)``.

    Each basis polynomial is bilinear in its own (first, second) variables,
    read here as (y, z). Returns the four ``(alpha_k, beta_k)`` pairs.
    """
    if p.nvars != 3:
        raise BadArity(f"regrouping expects a polynomial in (x, y, z), got {p.nvars} variables")
    if len(basis) != 4 or any(b.nvars != 2 for b in basis):
        raise BadArity("basis must be four bilinear polynomials")

    # rows: basis polynomials; columns: monomials 1, y, z, yz
    b = np.array([bp.coeffs for bp in basis])
    if 1.0 / np.linalg.cond(b) < SINGULAR_TOL:
        raise SingularBasis("basis polynomials are linearly dependent")
    without_x = p.coeffs[0::2]  # indices 0, 2, 4, 6: 1, y, z, yz
    with_x = p.coeffs[1::2]  # indices 1, 3, 5, 7: x, xy, xz, xyz
    alpha = np.linalg.solve(b.T, without_x)
    beta = np.linalg.solve(b.T, with_x)
    return [(complex(a), complex(bb)) for a, bb in zip(alpha, beta)]


def recombine(basis: Sequence[MultilinearPoly], pairs) -> MultilinearPoly:
    """Inverse of :func:`regroup_in_basis`."""
    coeffs = np.zeros(8, dtype=np.complex128)
    for bp, (alpha, beta) in zip(basis, pairs):
        coeffs[0::2] += bp.coeffs * alpha
        coeffs[1::2] += bp.coeffs * beta
    return MultilinearPoly(3, coeffs)


def basis_functions() -> list[MultilinearPoly]:
    """f1 = 1, f2 = x, f3 = y, f4 = xy."""
    return [MultilinearPoly(2, np.eye(4)[j]) for j in range(4)]


def bell_polys() -> list[MultilinearPoly]:
    """P1 = (1+xy)/sqrt2, P2 = (1-xy)/sqrt2, P3 = (x+y)/sqrt2, P4 = (x-y)/sqrt2."""
    s = INV_SQRT2
    return [
        MultilinearPoly(2, [s, 0, 0, s]),
        MultilinearPoly(2, [s, 0, 0, -s]),
        MultilinearPoly(2, [0, s, s, 0]),
        MultilinearPoly(2, [0, s, -s, 0]),
    ]
