"""Qubit states as multilinear polynomials.

Separability by the 2x2 determinant, Bell-basis algebra, teleportation over
Bell and general entangled resources, a small circuit simulator, and surface
meshes of real bilinear polynomials.
"""
from .circuit import measure, parse_circuit, run_circuit, trace_geometry
from .geometry import GridSpec, SurfaceMesh, export_mesh, sample_mesh
from .mpoly import (
    MultilinearPoly,
    bell_polys,
    basis_functions,
    evaluate,
    poly_product,
    poly_to_state,
    regroup_in_basis,
    state_to_poly,
)
from .numerics import det2, is_unitary, random_unitary4, rank1_decompose
from .qstate import QubitState, bell_decompose, bell_state, make_state, phase_equal, tensor
from .separability import classify, coefficient_matrix, factor_bilinear
from .teleport import (
    EntangledBasis,
    basis_states,
    bell_basis,
    computational_in_basis,
    correction_gate,
    make_basis,
    teleport_bell,
    teleport_general,
    teleport_poly,
)

__version__ = "0.1.0"
