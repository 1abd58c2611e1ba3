"""Input validation helpers, in the spirit of sklearn's check_array.

All checkers return the validated (possibly converted) array so they can be
used inline: ``stack = check_boundary_stack(stack)``.
"""

import numpy as np

from .errors import InvalidParameter

NUM_LANDMARKS = 98
NUM_PARTS = 15
HEATMAP_SIZE = 64
IMAGE_SIZE = 256


def check_points(points, min_points=2, name="points"):
    """Validate an (n, 2) array of finite 2-D points."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidParameter(f"{name} must have shape (n, 2), got {arr.shape}")
    if arr.shape[0] < min_points:
        raise InvalidParameter(f"{name} needs >= {min_points} points, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameter(f"{name} contains non-finite coordinates")
    return arr


def check_landmark_array(points):
    """Validate a full 98-point landmark array."""
    arr = check_points(points, min_points=NUM_LANDMARKS, name="landmarks")
    if arr.shape[0] != NUM_LANDMARKS:
        raise InvalidParameter(f"expected {NUM_LANDMARKS} landmarks, got {arr.shape[0]}")
    return arr


def check_boundary_stack(stack, name="stack"):
    """Validate a [15, 64, 64] heatmap stack with finite values in [0, 1]."""
    arr = np.asarray(stack)
    expected = (NUM_PARTS, HEATMAP_SIZE, HEATMAP_SIZE)
    if arr.shape != expected:
        raise InvalidParameter(f"{name} must have shape {expected}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameter(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise InvalidParameter(f"{name} values must lie in [0, 1]")
    return arr


def check_face_image(image, name="image"):
    """Validate a [3, 256, 256] RGB image with values in [0, 1]."""
    arr = np.asarray(image)
    expected = (3, IMAGE_SIZE, IMAGE_SIZE)
    if arr.shape != expected:
        raise InvalidParameter(f"{name} must have shape {expected}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameter(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise InvalidParameter(f"{name} values must lie in [0, 1]")
    return arr


def check_positive(value, name):
    if not np.isfinite(value) or value <= 0:
        raise InvalidParameter(f"{name} must be positive, got {value!r}")
    return value


def check_split_ratios(ratios):
    """Validate (train, val, test) ratios: positive, summing to 1 within 1e-9."""
    arr = np.asarray(ratios, dtype=np.float64)
    if arr.shape != (3,):
        raise InvalidParameter(f"expected 3 split ratios, got shape {arr.shape}")
    if np.any(arr <= 0):
        raise InvalidParameter("split ratios must all be positive")
    if abs(arr.sum() - 1.0) > 1e-9:
        raise InvalidParameter(f"split ratios must sum to 1, got {arr.sum()!r}")
    return arr
