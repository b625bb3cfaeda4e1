"""Exact checks for the wing set."""

from geowind.validation.combinatorial import check_edge_disjoint, check_maximality
from geowind.validation.intersection import check_non_intersection
from geowind.validation.metric import check_decagon, check_face_shapes
from geowind.validation.runner import run_all

__all__ = [
    "check_decagon",
    "check_edge_disjoint",
    "check_face_shapes",
    "check_maximality",
    "check_non_intersection",
    "run_all",
]
