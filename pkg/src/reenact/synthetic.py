"""Procedural synthetic faces with exact 98-point landmarks.

Backs the bundled detection-adapter mock and every offline test: a face is
generated from a small parameter vector, rendered with flat-shaded polygons,
and its landmarks are known analytically rather than detected.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace

import cv2
import numpy as np

from .boundary.landmarks import LandmarkSet


@dataclass
class FaceParams:
    center: tuple[float, float] = (128.0, 128.0)
    scale: float = 1.0
    rotation: float = 0.0
    width: float = 1.0
    mouth_open: float = 0.2
    eye_open: float = 0.7
    brow_raise: float = 0.0
    skin: tuple[int, int, int] = (208, 172, 148)
    lip: tuple[int, int, int] = (156, 62, 72)
    background: tuple[int, int, int] = (38, 44, 54)


def identity_params(name: str) -> FaceParams:
    """Deterministic identity-specific appearance derived from the name."""
    digest = hashlib.sha256(name.encode()).digest()
    u = [b / 255.0 for b in digest[:8]]
    return FaceParams(
        width=0.85 + 0.3 * u[0],
        skin=(int(180 + 60 * u[1]), int(140 + 60 * u[2]), int(120 + 60 * u[3])),
        lip=(int(120 + 80 * u[4]), int(40 + 50 * u[5]), int(50 + 60 * u[6])),
        background=(int(20 + 60 * u[7]), int(30 + 40 * u[1]), int(40 + 50 * u[2])),
    )


def _arc(x0, x1, y, bow, n):
    xs = np.linspace(x0, x1, n)
    t = np.linspace(-1.0, 1.0, n)
    return np.stack([xs, y - bow * (1.0 - t * t)], axis=1)


def _canonical_landmarks(p: FaceParams):
    """98 canonical points (pre pose transform) plus the forehead arc used
    only for rendering."""
    a = 62.0 * p.width
    b = 80.0
    cx, cy = 0.0, 0.0

    alpha = np.deg2rad(np.linspace(170.0, 370.0, 33))
    contour = np.stack([cx + a * np.cos(alpha), cy - b * np.sin(alpha)], axis=1)

    def eye_block(ex, ey, we, he):
        upper = np.array(
            [
                [ex - we, ey],
                [ex - we / 2, ey - 0.8 * he],
                [ex, ey - he],
                [ex + we / 2, ey - 0.8 * he],
                [ex + we, ey],
            ]
        )
        lower = np.array(
            [
                [ex + we / 2, ey + 0.8 * he],
                [ex, ey + he],
                [ex - we / 2, ey + 0.8 * he],
            ]
        )
        return np.vstack([upper, lower])

    eye_y = cy - 0.22 * b
    eye_dx = 0.38 * a
    we, he = 0.18 * a, 0.10 * b * max(p.eye_open, 0.05)
    left_eye = eye_block(cx - eye_dx, eye_y, we, he)
    right_eye = eye_block(cx + eye_dx, eye_y, we, he)

    brow_y = eye_y - 0.16 * b - 0.06 * b * p.brow_raise
    bw = 1.35 * we

    def brow_block(ex):
        upper = _arc(ex - bw, ex + bw, brow_y, 0.05 * b, 5)
        lower = _arc(ex + 0.8 * bw, ex - 0.8 * bw, brow_y + 0.045 * b, -0.02 * b, 4)
        return np.vstack([upper, lower])

    left_brow = brow_block(cx - eye_dx)
    # right brow: the default part spec shares index 46 between upper and
    # lower, so the lower contour has 4 fresh points after the shared corner
    rb_upper = _arc(cx + eye_dx - bw, cx + eye_dx + bw, brow_y, 0.05 * b, 5)
    rb_lower = _arc(cx + eye_dx + 0.7 * bw, cx + eye_dx - 0.9 * bw, brow_y + 0.045 * b, -0.02 * b, 4)
    right_brow = np.vstack([rb_upper, rb_lower])

    bridge = np.stack(
        [np.full(4, cx), np.linspace(cy - 0.30 * b, cy + 0.10 * b, 4)], axis=1
    )
    nose = np.array(
        [
            [cx - 0.14 * a, cy + 0.18 * b],
            [cx - 0.07 * a, cy + 0.215 * b],
            [cx, cy + 0.225 * b],
            [cx + 0.07 * a, cy + 0.215 * b],
            [cx + 0.14 * a, cy + 0.18 * b],
        ]
    )

    my = cy + 0.42 * b
    mw = 0.30 * a
    gap = 0.12 * b * p.mouth_open
    lip_th = 0.055 * b
    outer = np.vstack(
        [
            [[cx - mw, my + 0.3 * gap]],
            _arc(cx - 0.72 * mw, cx + 0.72 * mw, my - lip_th, 0.015 * b, 5),
            [[cx + mw, my + 0.3 * gap]],
            _arc(cx + 0.72 * mw, cx - 0.72 * mw, my + lip_th + gap, -0.02 * b, 5),
        ]
    )
    inner = np.vstack(
        [
            [[cx - 0.8 * mw, my + 0.3 * gap]],
            _arc(cx - 0.55 * mw, cx + 0.55 * mw, my - 0.012 * b, 0.0, 3),
            [[cx + 0.8 * mw, my + 0.3 * gap]],
            _arc(cx + 0.55 * mw, cx - 0.55 * mw, my + 0.012 * b + gap, 0.0, 3),
        ]
    )

    pupils = np.array([[cx - eye_dx, eye_y], [cx + eye_dx, eye_y]])

    pts = np.vstack(
        [contour, left_brow, right_brow, bridge, nose, left_eye, right_eye, outer, inner, pupils]
    )
    assert pts.shape == (98, 2)

    fore_alpha = np.deg2rad(np.linspace(10.0, 170.0, 17))
    forehead = np.stack([cx + a * np.cos(fore_alpha), cy - 1.05 * b * np.sin(fore_alpha)], axis=1)
    return pts, forehead


def _pose(points: np.ndarray, p: FaceParams) -> np.ndarray:
    c, s = np.cos(p.rotation), np.sin(p.rotation)
    rot = np.array([[c, -s], [s, c]])
    return (p.scale * points) @ rot.T + np.asarray(p.center)


def synthetic_landmarks(p: FaceParams, frame_size=(256, 256)) -> LandmarkSet:
    pts, _ = _canonical_landmarks(p)
    return LandmarkSet(_pose(pts, p), frame_size)


def _poly(img, pts, color):
    cv2.fillPoly(img, [np.round(pts).astype(np.int32)], color)


def render_face(p: FaceParams, frame_size=(256, 256)) -> np.ndarray:
    """Render to a [3, H, W] float RGB image in [0, 1]."""
    w, h = frame_size
    img = np.empty((h, w, 3), dtype=np.uint8)
    img[:] = p.background

    pts, forehead = _canonical_landmarks(p)
    pts = _pose(pts, p)
    forehead = _pose(forehead, p)

    darker = tuple(int(v * 0.55) for v in p.skin)
    _poly(img, np.vstack([pts[0:33], forehead]), p.skin)

    brow_color = (55, 38, 30)
    _poly(img, pts[33:42], brow_color)
    _poly(img, pts[42:51], brow_color)

    nose_color = tuple(int(v * 0.8) for v in p.skin)
    cv2.polylines(img, [np.round(pts[51:55]).astype(np.int32)], False, darker, 2)
    _poly(img, pts[55:60], nose_color)

    for eye, pupil in ((pts[60:68], pts[96]), (pts[68:76], pts[97])):
        _poly(img, eye, (245, 245, 245))
        r = max(1, int(2.5 * p.scale * p.eye_open * p.width))
        cv2.circle(img, tuple(np.round(pupil).astype(int)), r, (40, 30, 30), -1)

    _poly(img, pts[76:88], p.lip)
    if p.mouth_open > 0.05:
        _poly(img, pts[88:96], (30, 12, 15))

    rgb = img.astype(np.float32) / 255.0
    return np.ascontiguousarray(rgb.transpose(2, 0, 1))


def synthetic_sequence(identity: str, n_frames: int, seed: int = 0, frame_size=(256, 256)):
    """Animated clip: (params, landmarks, image) per frame, smooth pose and
    mouth motion with per-frame jitter."""
    base = identity_params(identity)
    rng = np.random.default_rng(seed)
    w, h = frame_size
    out = []
    for t in range(n_frames):
        phase = 2.0 * np.pi * t / max(n_frames, 2)
        p = replace(
            base,
            center=(
                w / 2 + 0.03 * w * np.sin(phase) + rng.normal(0, 0.5),
                h / 2 + 0.02 * h * np.cos(phase) + rng.normal(0, 0.5),
            ),
            scale=min(w, h) / 256.0 * (1.0 + 0.05 * np.sin(phase * 0.7)),
            rotation=0.12 * np.sin(phase * 1.3),
            mouth_open=float(np.clip(0.5 + 0.5 * np.sin(phase * 2.1), 0.0, 1.0)),
            eye_open=float(np.clip(0.7 + 0.25 * np.cos(phase), 0.1, 1.0)),
            brow_raise=float(0.5 * np.sin(phase + 1.0)),
        )
        out.append((p, synthetic_landmarks(p, frame_size), render_face(p, frame_size)))
    return out
