"""Regenerate the closed-form surface tables used by the acceptance tests.

Values come straight from the formulas below, not from entpoly, so the
tables stay an independent reference. Run: python tests/golden/make_golden.py
"""
import math
from pathlib import Path

S = math.sqrt(0.5)
SURFACES = {
    "f1": lambda x, y: 1.0,
    "f2": lambda x, y: x,
    "f3": lambda x, y: y,
    "f4": lambda x, y: x * y,
    "P1": lambda x, y: (1 + x * y) * S,
    "P2": lambda x, y: (1 - x * y) * S,
    "P3": lambda x, y: (x + y) * S,
    "P4": lambda x, y: (x - y) * S,
}


def grid(lo=-2.0, hi=2.0, n=25):
    return [lo + k * (hi - lo) / (n - 1) for k in range(n)]


def main():
    here = Path(__file__).parent
    xs = grid()
    for name, f in SURFACES.items():
        lines = ["x,y,z"] + [f"{x!r},{y!r},{float(f(x, y))!r}" for y in xs for x in xs]
        (here / f"{name}.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
