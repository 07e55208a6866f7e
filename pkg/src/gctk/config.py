"""Size limits for exhaustive enumerations."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_FACE_CAP = 1 << 20
ENV_SIZE_CAP = "GCTK_SIZE_CAP"


@dataclass(frozen=True)
class Limits:
    """Caps applied to face and maximal-face enumerations."""

    face_cap: int = DEFAULT_FACE_CAP


def current_limits() -> Limits:
    raw = os.environ.get(ENV_SIZE_CAP)
    if raw is None:
        return Limits()
    return Limits(face_cap=int(raw))


def resolve_cap(cap: int | None) -> int:
    return current_limits().face_cap if cap is None else cap
