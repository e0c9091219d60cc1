"""Command line interface.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import formats
from .circuit import measure, parse_circuit, run_circuit, trace_geometry
from .errors import EntpolyError, NotNormalized, ParseError
from .geometry import GridSpec, export_mesh, sample_mesh
from .mpoly import format_poly, state_to_poly
from .qstate import bell_state
from .separability import classify
from .teleport import bell_basis, teleport_general, teleport_poly


class UsageError(Exception):
    pass


def _c(z: complex) -> str:
    z = complex(z)
    # adding 0.0 turns -0.0 into 0.0
    return f"{z.real + 0.0:.10g}{z.imag + 0.0:+.10g}j"


def _write(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _grid(lo: float, hi: float, n: int) -> GridSpec:
    try:
        return GridSpec(lo, hi, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_separable(args) -> int:
    s = formats.state_from_json(formats.read_text(args.state_file))
    v = classify(s)
    print(f"det A = {_c(v.det)}  (|det| = {abs(v.det):.10g})")
    print(f"verdict: {'entangled' if v.entangled else 'separable'}")
    if v.factors:
        left, right = v.factors
        print(f"left qubit:  [{_c(left.amplitudes[0])}, {_c(left.amplitudes[1])}]")
        print(f"right qubit: [{_c(right.amplitudes[0])}, {_c(right.amplitudes[1])}]")
    return 0


def cmd_bell(args) -> int:
    s = bell_state(args.index)
    if args.emit == "state":
        _write(formats.state_to_json(s), args.out)
    elif args.emit == "poly":
        _write(formats.poly_to_json(state_to_poly(s)), args.out)
    else:
        mesh = sample_mesh(state_to_poly(s), _grid(args.min, args.max, args.n))
        _write(export_mesh(mesh, args.format), args.out)
    return 0


def parse_gamma(text: str) -> np.ndarray:
    parts = text.split()
    if len(parts) != 2:
        raise UsageError(f"--gamma needs two 're,im' pairs, got {text!r}")
    vals = []
    for part in parts:
        try:
            re_, im_ = part.split(",")
            vals.append(complex(float(re_), float(im_)))
        except ValueError as exc:
            raise UsageError(f"bad complex number {part!r} (expected re,im)") from exc
    return np.array(vals)


def cmd_teleport(args) -> int:
    gamma = parse_gamma(args.gamma)
    norm2 = float(np.sum(np.abs(gamma) ** 2))
    if abs(1.0 - norm2) > 1e-6:
        raise NotNormalized(abs(1.0 - norm2), "gamma")
    gamma = gamma / np.sqrt(norm2)
    basis = bell_basis() if args.bell else formats.basis_from_json(formats.read_text(args.basis))
    i = args.resource_index

    branches = teleport_general(gamma, basis, i)
    poly_pairs = teleport_poly(gamma, basis, i)
    agreement = max(
        abs(br.residual[0] - a) + abs(br.residual[1] - b) for br, (a, b) in zip(branches, poly_pairs)
    )
    print(f"resource V_{i}, gamma = [{_c(gamma[0])}, {_c(gamma[1])}]")
    print(f"{'k':>2}  {'residual':<50}  {'probability':>12}  correction")
    for br in branches:
        res = f"[{_c(br.residual[0])}, {_c(br.residual[1])}]"
        if br.correction is None:
            corr = "singular"
        else:
            m = br.correction
            corr = f"[[{_c(m[0, 0])}, {_c(m[0, 1])}], [{_c(m[1, 0])}, {_c(m[1, 1])}]]"
        print(f"{br.outcome:>2}  {res:<50}  {br.probability:>12.10g}  {corr}")
    print(f"state/polynomial agreement residual: {agreement:.3e}")
    return 0


def cmd_circuit_run(args) -> int:
    circuit = parse_circuit(formats.read_text(args.file))
    result = run_circuit(circuit)
    n = circuit.nqubits
    print("final amplitudes:")
    for j, a in enumerate(result.final.amplitudes):
        print(f"  |{j:0{n}b}>  {_c(a)}")
    if args.shots is not None:
        rec = measure(result.final, args.shots, args.seed)
        print(f"counts ({rec.shots} shots, seed {rec.seed}):")
        for bits in sorted(rec.counts):
            print(f"  {bits}  {rec.counts[bits]}")
    if args.trace is not None:
        out = Path(args.trace)
        out.mkdir(parents=True, exist_ok=True)
        for k, sl in enumerate(trace_geometry(circuit)):
            (out / f"slice_{k}.poly").write_text(formats.poly_to_json(sl.poly))
            if sl.mesh is not None:
                (out / f"slice_{k}.obj").write_bytes(export_mesh(sl.mesh, "obj"))
            print(f"slice {k} ({sl.label}): {format_poly(sl.poly, 1e-15)}")
    return 0


def cmd_mesh(args) -> int:
    grid = _grid(args.min, args.max, args.n)
    poly = formats.poly_from_json(formats.read_text(args.poly))
    _write(export_mesh(sample_mesh(poly, grid), args.format), args.out)
    return 0


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min", type=float, default=-2.0, help="grid lower bound (default -2)")
    p.add_argument("--max", type=float, default=2.0, help="grid upper bound (default 2)")
    p.add_argument("--n", type=int, default=25, help="samples per axis, at least 2 (default 25)")
    p.add_argument("--format", choices=("obj", "csv"), default="obj")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entpoly", description="Qubit states as multilinear polynomials."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("separable", help="determinant test on a 2-qubit state file")
    p.add_argument("state_file")
    p.set_defaults(func=cmd_separable)

    p = sub.add_parser("bell", help="emit a Bell state, its polynomial or its surface mesh")
    p.add_argument("--index", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--emit", choices=("state", "poly", "mesh"), default="state")
    p.add_argument("--out", help="output path (default: stdout)")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("teleport", help="teleportation branch table")
    p.add_argument("--gamma", required=True, help='state to send, e.g. "0.6,0 0.8,0"')
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--basis", help="basis file holding the unitary T")
    src.add_argument("--bell", action="store_true", help="use the Bell basis")
    p.add_argument("--resource-index", type=int, choices=(1, 2, 3, 4), default=1)
    p.set_defaults(func=cmd_teleport)

    p = sub.add_parser("circuit", help="circuit tools")
    csub = p.add_subparsers(dest="action", required=True)
    r = csub.add_parser("run", help="simulate a circuit program from |0...0>")
    r.add_argument("--file", required=True)
    r.add_argument("--shots", type=int)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--trace", help="directory for per-slice polynomial and mesh files")
    r.set_defaults(func=cmd_circuit_run)

    p = sub.add_parser("mesh", help="sample a real bilinear polynomial file into a mesh")
    p.add_argument("--poly", required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    _add_grid_flags(p)
    p.set_defaults(func=cmd_mesh)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "shots", None) is not None and args.shots < 1:
        parser.error("--shots must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (formats.FormatError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EntpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
