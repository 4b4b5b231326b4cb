"""Vertex isoperimetry on the l-infinity lattice graph Z^k x N^d."""

from .compression import centralize, central_compress, downward_compress, i_compress
from .formula import (boundary_via_projections, find_corner_point,
                      initial_segment_boundary_size, segment_boundary_increment)
from .lattice import (DomainSignature, PointSet, neighbors, project, section,
                      vertex_boundary)
from .ordering import compare_points, initial_segment, successor_point

__all__ = [
    "DomainSignature",
    "PointSet",
    "neighbors",
    "vertex_boundary",
    "project",
    "section",
    "compare_points",
    "successor_point",
    "initial_segment",
    "i_compress",
    "central_compress",
    "downward_compress",
    "centralize",
    "boundary_via_projections",
    "segment_boundary_increment",
    "initial_segment_boundary_size",
    "find_corner_point",
]
