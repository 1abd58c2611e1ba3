"""Rendering landmark contours into 64x64 Gaussian boundary heatmaps.

Coordinate convention: heatmap pixel (row r, col c) has its center at the
continuous point (x=c, y=r); a source-frame point (x, y) maps to
(x * W_out / w_src, y * H_out / h_src).
"""

from __future__ import annotations

import struct

import numpy as np

from ..errors import InvalidBoundary, InvalidParameter
from ..validation import HEATMAP_SIZE, NUM_PARTS, check_points
from .landmarks import LandmarkSet
from .spec import BoundarySpec

BHM_MAGIC = b"BHM1"

# Piecewise-linear interpolation density at source resolution; sub-pixel at
# the 4:1 downscale to 64x64.
DEFAULT_SAMPLES_PER_SEGMENT = 8
DEFAULT_SIGMA = 1.0


def interpolate_boundary(part_points, closed: bool, samples_per_segment: int):
    """Densify a polyline with uniform linear interpolants on every segment.

    Open inputs keep their final point, so the output has
    ``segments * samples_per_segment + 1`` points; closed inputs wrap the
    last segment back to the start and have ``segments * samples_per_segment``.
    """
    if part_points is None or len(part_points) < 2:
        raise InvalidBoundary("boundary interpolation needs at least 2 points")
    pts = check_points(part_points, min_points=2, name="part_points")
    s = int(samples_per_segment)
    if s < 1:
        raise InvalidParameter(f"samples_per_segment must be >= 1, got {samples_per_segment}")

    starts = pts
    ends = np.roll(pts, -1, axis=0) if closed else pts[1:]
    if not closed:
        starts = pts[:-1]

    t = (np.arange(s, dtype=np.float64) / s)[None, :, None]          # [1, s, 1]
    seg = starts[:, None, :] * (1.0 - t) + ends[:, None, :] * t       # [n_seg, s, 2]
    dense = seg.reshape(-1, 2)
    if not closed:
        dense = np.vstack([dense, pts[-1]])
    return dense


def _min_distance_map(points: np.ndarray, height: int, width: int) -> np.ndarray:
    """Min distance from every pixel center (c, r) to the polyline through points.

    Vectorized per segment over the segment's inflated bounding box only;
    pixels outside every box keep distance +inf.
    """
    dist = np.full((height, width), np.inf)
    cols = np.arange(width, dtype=np.float64)
    rows = np.arange(height, dtype=np.float64)

    if len(points) == 1:
        px, py = points[0]
        dx = cols[None, :] - px
        dy = rows[:, None] - py
        return np.sqrt(dx * dx + dy * dy)

    for a, b in zip(points[:-1], points[1:]):
        x0 = max(int(np.floor(min(a[0], b[0]) - 0.5)), 0)
        x1 = min(int(np.ceil(max(a[0], b[0]) + 0.5)), width - 1)
        y0 = max(int(np.floor(min(a[1], b[1]) - 0.5)), 0)
        y1 = min(int(np.ceil(max(a[1], b[1]) + 0.5)), height - 1)
        if x1 < x0 or y1 < y0:
            continue
        cx = cols[x0 : x1 + 1][None, :]
        cy = rows[y0 : y1 + 1][:, None]
        ab = b - a
        denom = ab[0] * ab[0] + ab[1] * ab[1]
        if denom == 0.0:
            t = np.zeros((y1 - y0 + 1, x1 - x0 + 1))
        else:
            t = ((cx - a[0]) * ab[0] + (cy - a[1]) * ab[1]) / denom
            t = np.clip(t, 0.0, 1.0)
        qx = a[0] + t * ab[0]
        qy = a[1] + t * ab[1]
        d = np.sqrt((cx - qx) ** 2 + (cy - qy) ** 2)
        np.minimum(dist[y0 : y1 + 1, x0 : x1 + 1], d, out=dist[y0 : y1 + 1, x0 : x1 + 1])
    return dist


def rasterize_heatmap(polyline, source_frame, out_size=(HEATMAP_SIZE, HEATMAP_SIZE)):
    """Binary map: 1 where the pixel center is within 0.5 px of the scaled line.

    Points outside the canvas contribute nothing (no error); a polyline fully
    off-canvas yields an all-zero map.
    """
    pts = np.asarray(polyline, dtype=np.float64)
    if pts.size == 0:
        raise InvalidBoundary("cannot rasterize an empty polyline")
    if pts.ndim != 2 or pts.shape[1] != 2 or not np.all(np.isfinite(pts)):
        raise InvalidBoundary(f"polyline must be finite (n, 2) points, got shape {pts.shape}")
    w, h = source_frame
    if w <= 0 or h <= 0:
        raise InvalidParameter(f"source_frame must be positive, got {source_frame}")
    out_h, out_w = out_size
    scaled = pts * np.array([out_w / w, out_h / h])
    dist = _min_distance_map(scaled, out_h, out_w)
    return (dist <= 0.5).astype(np.float32)


def _gaussian_kernel_1d(sigma: float) -> np.ndarray:
    radius = int(np.ceil(3.0 * sigma))
    k = np.arange(-radius, radius + 1, dtype=np.float64)
    g = np.exp(-0.5 * (k / sigma) ** 2)
    return g / g.sum()


def gaussian_smooth(binary_map, sigma: float) -> np.ndarray:
    """Zero-padded convolution with a normalized Gaussian (radius ceil(3*sigma)),
    then peak-renormalized to max 1; an all-zero input stays all-zero."""
    if sigma <= 0 or not np.isfinite(sigma):
        raise InvalidParameter(f"sigma must be positive, got {sigma!r}")
    src = np.asarray(binary_map, dtype=np.float64)
    g = _gaussian_kernel_1d(sigma)
    r = (len(g) - 1) // 2
    padded = np.pad(src, r, mode="constant")
    # separable: the normalized 2-D kernel is the outer product of two
    # normalized 1-D kernels
    tmp = np.apply_along_axis(lambda row: np.convolve(row, g, mode="valid"), 1, padded)
    out = np.apply_along_axis(lambda col: np.convolve(col, g, mode="valid"), 0, tmp)
    peak = out.max()
    if peak > 0.0:
        out = out / peak
    return out


def render_boundary_stack(
    landmarks: LandmarkSet,
    spec: BoundarySpec,
    sigma: float = DEFAULT_SIGMA,
    samples_per_segment: int = DEFAULT_SAMPLES_PER_SEGMENT,
) -> np.ndarray:
    """Render all 15 part contours into a float32 [15, 64, 64] stack."""
    stack = np.zeros((NUM_PARTS, HEATMAP_SIZE, HEATMAP_SIZE), dtype=np.float32)
    for i, part in enumerate(spec.parts):
        try:
            pts = landmarks.points[list(part.indices)]
            dense = interpolate_boundary(pts, part.closed, samples_per_segment)
            binary = rasterize_heatmap(dense, landmarks.frame_size)
            stack[i] = gaussian_smooth(binary, sigma).astype(np.float32)
        except (InvalidBoundary, InvalidParameter) as exc:
            raise type(exc)(f"part {part.name!r}: {exc}") from exc
    return stack


def save_bhm(path, stack: np.ndarray) -> None:
    """Write the .bhm cache format: magic, u32 K/H/W, float32 LE, C order."""
    arr = np.ascontiguousarray(stack, dtype="<f4")
    k, h, w = arr.shape
    with open(path, "wb") as f:
        f.write(BHM_MAGIC)
        f.write(struct.pack("<III", k, h, w))
        f.write(arr.tobytes())


def load_bhm(path) -> np.ndarray:
    with open(path, "rb") as f:
        magic = f.read(4)
        if magic != BHM_MAGIC:
            raise InvalidParameter(f"{path}: bad magic {magic!r}, expected {BHM_MAGIC!r}")
        k, h, w = struct.unpack("<III", f.read(12))
        data = f.read(4 * k * h * w)
    if len(data) != 4 * k * h * w:
        raise InvalidParameter(f"{path}: truncated payload")
    return np.frombuffer(data, dtype="<f4").reshape(k, h, w).copy()
