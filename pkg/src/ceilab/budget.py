"""Wall-clock budgets for long-running kernels."""

from __future__ import annotations

import os
import time
from contextlib import contextmanager

from .errors import ResourceError

ENV_VAR = "CEILAB_BUDGET_MS"

_deadline = None


def budget_ms() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ResourceError(f"{ENV_VAR} must be an integer number of milliseconds, got {raw!r}")
    return value if value > 0 else None


@contextmanager
def instance_budget(ms: int | None = None):
    """Install a deadline for the enclosed computation (defaults to the env var)."""
    global _deadline
    ms = budget_ms() if ms is None else ms
    saved = _deadline
    _deadline = None if ms is None else time.monotonic() + ms / 1000.0
    try:
        yield
    finally:
        _deadline = saved


def check(what: str = "computation") -> None:
    if _deadline is not None and time.monotonic() > _deadline:
        raise ResourceError(f"{what} exceeded the per-instance time budget")
