"""JSON file formats for states, polynomials and entangled bases.

Complex numbers are two-element ``[re, im]`` arrays:

* state: ``{"n": 2, "amplitudes": [[re, im], ...]}``
* polynomial: ``{"nvars": 2, "coeffs": [[re, im], ...]}``
* basis: ``{"T": [[[re, im], ...4], ...4]}``
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import EntpolyError
from .mpoly import MultilinearPoly
from .qstate import QubitState
from .teleport import EntangledBasis, make_basis


class FormatError(EntpolyError):
    """Malformed document: bad JSON, missing keys, wrong shapes."""


def _pair(v) -> list[float]:
    return [float(v.real), float(v.imag)]


def _complex_list(raw, length: int, what: str) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != length:
        got = len(raw) if isinstance(raw, list) else type(raw).__name__
        raise FormatError(f"{what}: expected {length} entries, got {got}")
    out = np.empty(length, dtype=np.complex128)
    for j, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in item)
        ):
            raise FormatError(f"{what}[{j}]: expected [re, im], got {item!r}")
        out[j] = complex(item[0], item[1])
    return out


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    return doc


def _count(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= 12:
        raise FormatError(f"'{key}' must be an integer in 1..12, got {v!r}")
    return v


def state_from_json(text: str) -> QubitState:
    doc = _load(text)
    n = _count(doc, "n")
    return QubitState(n, _complex_list(doc.get("amplitudes"), 2**n, "amplitudes"))


def state_to_json(s: QubitState) -> str:
    return json.dumps({"n": s.n, "amplitudes": [_pair(a) for a in s.amplitudes]}, indent=1) + "\n"


def poly_from_json(text: str) -> MultilinearPoly:
    doc = _load(text)
    nvars = _count(doc, "nvars")
    return MultilinearPoly(nvars, _complex_list(doc.get("coeffs"), 2**nvars, "coeffs"))


def poly_to_json(p: MultilinearPoly) -> str:
    return json.dumps({"nvars": p.nvars, "coeffs": [_pair(c) for c in p.coeffs]}, indent=1) + "\n"


def basis_from_json(text: str) -> EntangledBasis:
    doc = _load(text)
    rows = doc.get("T")
    if not isinstance(rows, list) or len(rows) != 4:
        raise FormatError("'T' must be a list of 4 rows")
    return make_basis(np.array([_complex_list(r, 4, f"T[{i}]") for i, r in enumerate(rows)]))


def basis_to_json(b: EntangledBasis) -> str:
    return json.dumps({"T": [[_pair(v) for v in row] for row in b.T]}) + "\n"


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
