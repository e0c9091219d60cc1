"""Height-field meshes of real bilinear polynomials, with OBJ and CSV export."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComplexCoefficients, WrongArity
from .mpoly import MultilinearPoly, evaluate

IMAG_TOL = 1e-12


@dataclass(frozen=True)
class GridSpec:
    min: float = -2.0
    max: float = 2.0
    n: int = 25

    def __post_init__(self):
        if not self.min < self.max:
            raise ValueError(f"grid needs min < max, got [{self.min}, {self.max}]")
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 samples per axis, got {self.n}")

    def coords(self) -> list[float]:
        span = self.max - self.min
        return [self.min + c * span / (self.n - 1) for c in range(self.n)]


@dataclass(frozen=True, eq=False)
class SurfaceMesh:
    grid: GridSpec
    # heights[r][c] = P(x_c, y_r)
    heights: np.ndarray

    @property
    def n_vertices(self) -> int:
        return self.grid.n**2

    @property
    def n_triangles(self) -> int:
        return 2 * (self.grid.n - 1) ** 2


def sample_mesh(p: MultilinearPoly, g: GridSpec | None = None) -> SurfaceMesh:
    g = g or GridSpec()
    if p.nvars != 2:
        raise WrongArity(f"surfaces need a bilinear polynomial, got {p.nvars} variables")
    if not p.is_real(IMAG_TOL):
        raise ComplexCoefficients("only real-coefficient polynomials have a real surface")
    real = MultilinearPoly(2, p.coeffs.real)
    xs = g.coords()
    heights = np.array([[evaluate(real, (x, y)).real for x in xs] for y in xs])
    heights.setflags(write=False)
    return SurfaceMesh(g, heights)


def triangles(n: int) -> list[tuple[int, int, int]]:
    """1-based vertex triples, two per cell, counter-clockwise seen from +z."""
    tris = []
    for r in range(n - 1):
        for c in range(n - 1):
            a = r * n + c + 1
            b, d = a + 1, a + n
            tris.append((a, b, d + 1))
            tris.append((a, d + 1, d))
    return tris


def _num(v: float) -> str:
    return f"{v:.17g}"


def export_mesh(m: SurfaceMesh, format: str = "obj") -> bytes:
    xs = m.grid.coords()
    rows = [(x, y, float(m.heights[r][c])) for r, y in enumerate(xs) for c, x in enumerate(xs)]
    if format == "obj":
        lines = [f"v {_num(x)} {_num(y)} {_num(z)}" for x, y, z in rows]
        lines += [f"f {a} {b} {c}" for a, b, c in triangles(m.grid.n)]
    elif format == "csv":
        lines = ["x,y,z"] + [f"{_num(x)},{_num(y)},{_num(z)}" for x, y, z in rows]
    else:
        raise ValueError(f"unknown mesh format {format!r}")
    return ("\n".join(lines) + "\n").encode("ascii")
