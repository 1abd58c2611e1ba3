"""Boundary-transfer face reenactment toolkit."""

__version__ = "0.1.0"

from . import errors
from .boundary import (
    BoundarySpec,
    LandmarkSet,
    RigidTransform,
    compute_mean_shape,
    default_boundary_spec,
    render_boundary_stack,
    rigid_align,
)

__all__ = [
    "errors",
    "BoundarySpec",
    "LandmarkSet",
    "RigidTransform",
    "compute_mean_shape",
    "default_boundary_spec",
    "render_boundary_stack",
    "rigid_align",
    "__version__",
]
