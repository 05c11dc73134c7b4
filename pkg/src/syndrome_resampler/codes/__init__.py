"""Surface-code construction."""

from .base import BaseCodeBuilder, CodeError, InvalidDistanceError
from .graph import DetectionGraph, detection_graph
from .layouts import BUILDERS, build_code
from .rotated import RotatedCodeBuilder, build_rotated
from .unrotated import UnrotatedCodeBuilder, build_unrotated

__all__ = [
    "BaseCodeBuilder",
    "CodeError",
    "InvalidDistanceError",
    "DetectionGraph",
    "detection_graph",
    "BUILDERS",
    "build_code",
    "RotatedCodeBuilder",
    "build_rotated",
    "UnrotatedCodeBuilder",
    "build_unrotated",
]
