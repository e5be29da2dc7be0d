"""Exact computations on hollow and empty lattice polytopes."""

from hollowpoly.classify import (
    ClassificationReport,
    Verdict,
    classify,
    is_empty_in_lattice,
    is_general_position,
    is_hollow,
    is_simplicial,
)
from hollowpoly.exactgeo import (
    DegenerateHullError,
    Direction,
    Facet,
    GeometryError,
    HullStructure,
    PreconditionError,
    contains,
    convex_hull,
)
from hollowpoly.lattice import enumerate_lattice_points, interior_lattice_points, locate, parity_witness
from hollowpoly.reduce import ReductionError, ReductionTrace, reduce_to_empty, swap_step
from hollowpoly.segments import longest_lattice_segment, modk_witness, translate_avoiding_sublattice
from hollowpoly.width import flatness_audit, half_scaled, lattice_width, linf_inradius

__version__ = "0.1.0"
