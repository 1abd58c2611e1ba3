"""The 15-part decomposition of 98 landmarks into boundary contours."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from ..errors import InvalidParameter
from ..validation import NUM_LANDMARKS, NUM_PARTS


@dataclass(frozen=True)
class BoundaryPart:
    name: str
    indices: tuple[int, ...]
    closed: bool = False

    def __post_init__(self):
        if len(self.indices) < 2:
            raise InvalidParameter(f"part {self.name!r} needs >= 2 landmark indices")
        for i in self.indices:
            if not 0 <= i < NUM_LANDMARKS:
                raise InvalidParameter(f"part {self.name!r}: index {i} out of [0, {NUM_LANDMARKS})")
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))


@dataclass(frozen=True)
class BoundarySpec:
    """Ordered list of 15 facial parts, each a polyline over landmark indices."""

    parts: tuple[BoundaryPart, ...]

    def __post_init__(self):
        if len(self.parts) != NUM_PARTS:
            raise InvalidParameter(f"expected {NUM_PARTS} parts, got {len(self.parts)}")
        object.__setattr__(self, "parts", tuple(self.parts))

    def to_json_obj(self) -> dict:
        return {
            "parts": [
                {"name": p.name, "indices": list(p.indices), "closed": p.closed}
                for p in self.parts
            ]
        }

    def save(self, path) -> None:
        with open(path, "w") as f:
            json.dump(self.to_json_obj(), f, indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BoundarySpec":
        try:
            parts = [
                BoundaryPart(p["name"], tuple(p["indices"]), bool(p["closed"]))
                for p in obj["parts"]
            ]
        except (KeyError, TypeError) as exc:
            raise InvalidParameter(f"malformed boundary spec JSON: {exc}") from exc
        return cls(tuple(parts))

    @classmethod
    def load(cls, path) -> "BoundarySpec":
        with open(path) as f:
            return cls.from_json_obj(json.load(f))

    def content_hash(self) -> str:
        """SHA-256 of the canonical (sorted-key, no-whitespace) JSON form."""
        canon = json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()


def _rng(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


def default_boundary_spec() -> BoundarySpec:
    """15 contours over the WFLW layout, with a Helen-style lower nose contour.

    Parts whose curve returns to a shared corner list that corner explicitly
    as the final index, so every part is stored as an open polyline.
    """
    parts = (
        BoundaryPart("face_contour", _rng(0, 32)),
        BoundaryPart("left_eyebrow_upper", _rng(33, 37)),
        BoundaryPart("left_eyebrow_lower", (38, 39, 40, 41, 33)),
        BoundaryPart("right_eyebrow_upper", _rng(42, 46)),
        BoundaryPart("right_eyebrow_lower", _rng(46, 50)),
        BoundaryPart("nose_bridge", _rng(51, 54)),
        BoundaryPart("nose_boundary", _rng(55, 59)),
        BoundaryPart("left_eye_upper", _rng(60, 64)),
        BoundaryPart("left_eye_lower", (64, 65, 66, 67, 60)),
        BoundaryPart("right_eye_upper", _rng(68, 72)),
        BoundaryPart("right_eye_lower", (72, 73, 74, 75, 68)),
        BoundaryPart("outer_lip_upper", _rng(76, 82)),
        BoundaryPart("outer_lip_lower", (82, 83, 84, 85, 86, 87, 76)),
        BoundaryPart("inner_lip_upper", _rng(88, 92)),
        BoundaryPart("inner_lip_lower", (92, 93, 94, 95, 88)),
    )
    return BoundarySpec(parts)
