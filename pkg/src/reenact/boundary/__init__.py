"""Boundary-heatmap geometry: landmarks, part specs, rendering, rigid alignment."""

from .landmarks import LandmarkSet, load_landmark_file, save_landmark_file
from .spec import BoundaryPart, BoundarySpec, default_boundary_spec
from .heatmaps import (
    interpolate_boundary,
    rasterize_heatmap,
    gaussian_smooth,
    render_boundary_stack,
    load_bhm,
    save_bhm,
)
from .procrustes import (
    RigidTransform,
    rigid_align,
    compute_mean_shape,
    generalized_procrustes,
    procrustes_residual,
)

__all__ = [
    "LandmarkSet",
    "load_landmark_file",
    "save_landmark_file",
    "BoundaryPart",
    "BoundarySpec",
    "default_boundary_spec",
    "interpolate_boundary",
    "rasterize_heatmap",
    "gaussian_smooth",
    "render_boundary_stack",
    "load_bhm",
    "save_bhm",
    "RigidTransform",
    "rigid_align",
    "compute_mean_shape",
    "generalized_procrustes",
    "procrustes_residual",
]
