"""Size caps. ``OQKIT_MAX_ELEMS`` overrides every element cap when set."""

from __future__ import annotations

import os

from .errors import TooLarge

MAX_ELEMS = 1024
MAX_FRAME_SOURCE = 16
MAX_FILTERS = 2**14

ENV_VAR = "OQKIT_MAX_ELEMS"


def element_cap(default: int = MAX_ELEMS, override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    return default


def ensure_size(n: int, what: str, default: int = MAX_ELEMS, override: int | None = None) -> None:
    cap = element_cap(default, override)
    if n > cap:
        raise TooLarge(f"{what} has {n} elements, cap is {cap} (set {ENV_VAR} to raise it)")
