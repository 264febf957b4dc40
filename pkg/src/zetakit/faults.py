"""Deliberate fault injection for sensitivity testing.

The identity harness is only trustworthy if a small wrong answer anywhere
actually trips at least one check.  This module provides the hook: while a
fault is armed, the instrumented function multiplies its output by
``(1 + rel)``, and the Bernoulli table hook corrupts one exact entry.
Production overhead is a single dict lookup per call.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

__all__ = ["FAULT_TARGETS", "inject", "active", "perturb"]

# Function outputs that can be perturbed, plus the exact-table hook.
FAULT_TARGETS = (
    "ln_gamma",
    "hurwitz_zeta",
    "lerch_phi",
    "ext_fd",
    "ext_be",
    "bernoulli-table",
)

_ACTIVE: dict[str, float] = {}


def active(name: str) -> bool:
    return name in _ACTIVE


def perturb(name: str, value: complex) -> complex:
    """Return ``value`` scaled by (1 + rel) when fault ``name`` is armed."""
    rel = _ACTIVE.get(name)
    if rel is None:
        return value
    return value * (1.0 + rel)


@contextmanager
def inject(name: str, rel: float = 1e-6) -> Iterator[None]:
    """Arm fault ``name`` for the duration of the context."""
    if name not in FAULT_TARGETS:
        raise KeyError(f"unknown fault target: {name!r}")
    _ACTIVE[name] = rel
    try:
        yield
    finally:
        _ACTIVE.pop(name, None)
