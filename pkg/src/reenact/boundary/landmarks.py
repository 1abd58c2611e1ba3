"""98-point facial landmark sets (WFLW ordering) and their text file format."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidParameter
from ..validation import check_landmark_array


@dataclass
class LandmarkSet:
    """Ordered 98 facial landmarks in pixel coordinates of a stated frame.

    Point ordering follows the WFLW convention: face contour 0-32, eyebrows
    33-50, nose 51-59, eyes 60-75, outer lip 76-87, inner lip 88-95,
    pupils 96-97.
    """

    points: np.ndarray
    frame_size: tuple[int, int] = (256, 256)

    def __post_init__(self):
        self.points = check_landmark_array(self.points)
        w, h = self.frame_size
        if w <= 0 or h <= 0:
            raise InvalidParameter(f"frame_size must be positive, got {self.frame_size}")
        self.frame_size = (int(w), int(h))

    def translated(self, dx: float, dy: float) -> "LandmarkSet":
        return LandmarkSet(self.points + np.array([dx, dy]), self.frame_size)

    def copy(self) -> "LandmarkSet":
        return LandmarkSet(self.points.copy(), self.frame_size)


def save_landmark_file(path, landmarks: LandmarkSet) -> None:
    """Write the text format: a 'frame <w> <h>' header then 98 'x y' lines."""
    w, h = landmarks.frame_size
    lines = [f"frame {w} {h}"]
    lines += [f"{x!r} {y!r}" for x, y in landmarks.points]
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def load_landmark_file(path) -> LandmarkSet:
    with open(path) as f:
        lines = [ln.strip() for ln in f if ln.strip()]
    if not lines or not lines[0].startswith("frame "):
        raise InvalidParameter(f"{path}: missing 'frame <w> <h>' header")
    try:
        _, w, h = lines[0].split()
        frame = (int(w), int(h))
        pts = np.array([[float(tok) for tok in ln.split()] for ln in lines[1:]])
    except ValueError as exc:
        raise InvalidParameter(f"{path}: malformed landmark file: {exc}") from exc
    return LandmarkSet(pts, frame)
