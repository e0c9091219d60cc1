"""A tiny circuit language, a state-vector simulator and geometry traces.

Program text::

    # Bell pair
    qubits 2
    h 0
    slice
    cx 0 1

Qubit 0 is the leftmost ket symbol (most significant amplitude bit).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ParseError, WrongArity
from .geometry import GridSpec, SurfaceMesh, sample_mesh
from .mpoly import MultilinearPoly, state_to_poly
from .qstate import MAX_QUBITS, QubitState, zero_state

_S = math.sqrt(0.5)
GATE_MATRICES = {
    "h": np.array([[_S, _S], [_S, -_S]], dtype=np.complex128),
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
_ARITY = {"h": 1, "x": 1, "z": 1, "cx": 2}


@dataclass(frozen=True)
class Gate:
    kind: str
    targets: tuple[int, ...]


@dataclass(frozen=True)
class Circuit:
    nqubits: int
    gates: tuple[Gate, ...] = ()
    # number of gates applied before each slice marker
    slices: tuple[int, ...] = ()


@dataclass(frozen=True)
class MeasurementRecord:
    shots: int
    counts: dict[str, int]
    seed: int


@dataclass(frozen=True)
class RunResult:
    final: QubitState
    # (gates applied, state) at every slice marker and at the end
    snapshots: list[tuple[int, QubitState]] = field(default_factory=list)


@dataclass(frozen=True)
class TraceSlice:
    label: str
    position: int
    poly: MultilinearPoly
    mesh: Optional[SurfaceMesh]


def _parse_index(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"expected a qubit index, got {tok!r}")
    return int(tok)


def parse_circuit(text: str) -> Circuit:
    nqubits = None
    gates: list[Gate] = []
    slices: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        head, args = toks[0].lower(), toks[1:]
        if nqubits is None:
            if head != "qubits":
                raise ParseError(lineno, "program must start with 'qubits N'")
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError(lineno, "'qubits' takes one non-negative integer")
            nqubits = int(args[0])
            if not 1 <= nqubits <= MAX_QUBITS:
                raise ParseError(lineno, f"qubit count must be in 1..{MAX_QUBITS}")
            continue
        if head == "qubits":
            raise ParseError(lineno, "duplicate 'qubits' header")
        if head == "slice":
            if args:
                raise ParseError(lineno, "'slice' takes no arguments")
            slices.append(len(gates))
            continue
        if head not in _ARITY:
            raise ParseError(lineno, f"unknown instruction {head!r}")
        if len(args) != _ARITY[head]:
            raise ParseError(lineno, f"'{head}' takes {_ARITY[head]} qubit index(es), got {len(args)}")
        targets = tuple(_parse_index(a, lineno) for a in args)
        for q in targets:
            if q >= nqubits:
                raise ParseError(lineno, f"qubit {q} out of range for {nqubits} qubits")
        if len(set(targets)) != len(targets):
            raise ParseError(lineno, "control and target must differ")
        gates.append(Gate(head, targets))
    if nqubits is None:
        raise ParseError(max(1, len(text.splitlines())), "missing 'qubits N' header")
    return Circuit(nqubits, tuple(gates), tuple(slices))


def apply_gate(amps: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    psi = amps.reshape((2,) * n)
    if gate.kind == "cx":
        c, t = gate.targets
        out = psi.copy()
        sel1 = [slice(None)] * n
        sel1[c] = 1
        sel1 = tuple(sel1)
        # with the control axis fixed, the target axis index shifts down by one if c < t
        out[sel1] = np.flip(psi[sel1], axis=t - (c < t))
        return out.reshape(-1)
    (q,) = gate.targets
    out = np.tensordot(GATE_MATRICES[gate.kind], psi, axes=([1], [q]))
    return np.moveaxis(out, 0, q).reshape(-1)


def _run(c: Circuit, initial: QubitState, positions: set[int]) -> tuple[QubitState, list[tuple[int, QubitState]]]:
    if initial.n != c.nqubits:
        raise WrongArity(f"circuit has {c.nqubits} qubits, initial state has {initial.n}")
    amps = initial.amplitudes.copy()
    snaps = []
    if 0 in positions:
        snaps.append((0, initial))
    for step, gate in enumerate(c.gates, start=1):
        amps = apply_gate(amps, gate, c.nqubits)
        if step in positions:
            snaps.append((step, QubitState(c.nqubits, amps)))
    final = QubitState(c.nqubits, amps) if c.gates else initial
    return final, snaps


def run_circuit(c: Circuit, initial: Optional[QubitState] = None) -> RunResult:
    if initial is None:
        initial = zero_state(c.nqubits)
    final, snaps = _run(c, initial, set(c.slices) | {len(c.gates)})
    return RunResult(final, snaps)


def measure(s: QubitState, shots: int, seed: int = 0) -> MeasurementRecord:
    """Born-rule sampling with ``numpy.random.Generator(PCG64(seed))``.

    Each shot draws one uniform double and takes the first basis index whose
    cumulative probability exceeds it.
    """
    if shots < 1:
        raise ValueError("shots must be at least 1")
    probs = np.abs(s.amplitudes) ** 2
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    rng = np.random.Generator(np.random.PCG64(seed))
    idx = np.searchsorted(cdf, rng.random(shots), side="right")
    idx = np.minimum(idx, probs.size - 1)
    hits = np.bincount(idx, minlength=probs.size)
    counts = {format(j, f"0{s.n}b"): int(h) for j, h in enumerate(hits) if h}
    return MeasurementRecord(shots, counts, seed)


def trace_geometry(c: Circuit, grid: Optional[GridSpec] = None) -> list[TraceSlice]:
    """Polynomial (and, for real two-qubit states, surface) at each slice.

    Slices are taken at the start, at each marker, and at the end; markers
    that coincide with the start or end are merged with them.
    """
    grid = grid or GridSpec()
    end = len(c.gates)
    _, snaps = _run(c, zero_state(c.nqubits), {0, end, *c.slices})
    out = []
    for pos, state in snaps:
        label = "initial" if pos == 0 else "final" if pos == end else f"after gate {pos}"
        poly = state_to_poly(state)
        mesh = sample_mesh(poly, grid) if poly.nvars == 2 and poly.is_real() else None
        out.append(TraceSlice(label, pos, poly, mesh))
    return out
