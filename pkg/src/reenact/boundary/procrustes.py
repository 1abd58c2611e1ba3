"""Similarity-transform (Procrustes) alignment and generalized mean shapes.

2-D point sets are treated as complex vectors: a similarity transform without
reflection is p' = a*p + t with complex a = scale * exp(i*rotation), which
turns the least-squares alignment into a one-shot linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateShape, InvalidParameter
from .landmarks import LandmarkSet


@dataclass
class RigidTransform:
    """p' = scale * R(rotation) @ p + translation."""

    scale: float
    rotation: float
    translation: np.ndarray

    def __post_init__(self):
        if self.scale <= 0 or not np.isfinite(self.scale):
            raise InvalidParameter(f"scale must be positive, got {self.scale!r}")
        self.translation = np.asarray(self.translation, dtype=np.float64).reshape(2)

    @property
    def _a(self) -> complex:
        return self.scale * np.exp(1j * self.rotation)

    def apply(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=np.float64)
        z = pts[..., 0] + 1j * pts[..., 1]
        out = self._a * z + (self.translation[0] + 1j * self.translation[1])
        return np.stack([out.real, out.imag], axis=-1)

    def matrix(self) -> np.ndarray:
        """2x3 affine matrix usable with image warpers."""
        c, s = np.cos(self.rotation), np.sin(self.rotation)
        m = self.scale * np.array([[c, -s], [s, c]])
        return np.hstack([m, self.translation[:, None]])

    def inverse(self) -> "RigidTransform":
        inv_a = 1.0 / self._a
        t = self.translation[0] + 1j * self.translation[1]
        inv_t = -inv_a * t
        return RigidTransform(abs(inv_a), float(np.angle(inv_a)), [inv_t.real, inv_t.imag])

    def compose(self, inner: "RigidTransform") -> "RigidTransform":
        """Transform equal to applying `inner` first, then self."""
        a = self._a * inner._a
        t_inner = inner.translation[0] + 1j * inner.translation[1]
        t = self._a * t_inner + (self.translation[0] + 1j * self.translation[1])
        return RigidTransform(abs(a), float(np.angle(a)), [t.real, t.imag])

    @classmethod
    def identity(cls) -> "RigidTransform":
        return cls(1.0, 0.0, np.zeros(2))


def _as_complex(points: np.ndarray) -> np.ndarray:
    return points[:, 0] + 1j * points[:, 1]


def _fit_similarity(src: np.ndarray, dst: np.ndarray) -> RigidTransform:
    """Least-squares similarity transform mapping src points onto dst."""
    z, w = _as_complex(src), _as_complex(dst)
    zm, wm = z.mean(), w.mean()
    zc, wc = z - zm, w - wm
    denom = np.sum(np.abs(zc) ** 2)
    if denom < 1e-18:
        raise DegenerateShape("source shape has zero variance")
    a = np.sum(np.conj(zc) * wc) / denom
    if abs(a) < 1e-18:
        raise DegenerateShape("shapes share no similarity component (degenerate reference)")
    t = wm - a * zm
    return RigidTransform(abs(a), float(np.angle(a)), [t.real, t.imag])


def rigid_align(shape: LandmarkSet, reference: LandmarkSet):
    """Optimal similarity transform of `shape` onto `reference` plus the result."""
    transform = _fit_similarity(shape.points, reference.points)
    aligned = LandmarkSet(transform.apply(shape.points), reference.frame_size)
    return transform, aligned


def _canonical(points: np.ndarray) -> np.ndarray:
    """Centroid at the origin, unit Frobenius norm."""
    centered = points - points.mean(axis=0)
    norm = np.linalg.norm(centered)
    if norm < 1e-18:
        raise DegenerateShape("shape has zero variance")
    return centered / norm


def generalized_procrustes(point_sets, tol: float = 1e-6, max_iter: int = 50):
    """Iterative mean of shapes modulo similarity transforms.

    Returns (mean_points, residual_history); the mean is canonically
    normalized (centroid 0, unit norm). Each iteration aligns every shape to
    the current mean and averages, which never increases the total residual.
    """
    arrays = [np.asarray(p, dtype=np.float64) for p in point_sets]
    if not arrays:
        raise InvalidParameter("need at least one shape")
    mean = _canonical(arrays[0])
    history = []
    for _ in range(max_iter):
        aligned = [_fit_similarity(a, mean).apply(a) for a in arrays]
        history.append(float(sum(np.sum((al - mean) ** 2) for al in aligned)))
        new_mean = _canonical(np.mean(aligned, axis=0))
        movement = float(np.linalg.norm(new_mean - mean))
        mean = new_mean
        if movement < tol:
            break
    return mean, history


def compute_mean_shape(
    shapes,
    frame_size: tuple[int, int] = (256, 256),
    fit_margin: float = 0.2,
) -> LandmarkSet:
    """Generalized Procrustes mean, placed centered into a pixel frame.

    The canonical mean is scaled so its bounding box's long side spans
    (1 - 2*fit_margin) of the frame's short side.
    """
    if not shapes:
        raise InvalidParameter("need at least one shape")
    mean, _ = generalized_procrustes([s.points for s in shapes])
    span = (mean.max(axis=0) - mean.min(axis=0)).max()
    target = (1.0 - 2.0 * fit_margin) * min(frame_size)
    scaled = mean * (target / span)
    center = np.array(frame_size, dtype=np.float64) / 2.0
    placed = scaled - (scaled.max(axis=0) + scaled.min(axis=0)) / 2.0 + center
    return LandmarkSet(placed, frame_size)


def procrustes_residual(point_sets, reference: np.ndarray) -> float:
    """Total squared alignment residual onto the canonically normalized reference."""
    ref = _canonical(np.asarray(reference, dtype=np.float64))
    total = 0.0
    for p in point_sets:
        arr = np.asarray(p, dtype=np.float64)
        aligned = _fit_similarity(arr, ref).apply(arr)
        total += float(np.sum((aligned - ref) ** 2))
    return total
