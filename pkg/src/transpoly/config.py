from __future__ import annotations

import contextlib
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """Size caps. Exceeding one raises RepresentationLimit, never truncates."""

    max_ordinal_depth: int = 8
    max_terms: int = 64
    # per polynomial: Archimedean bases, and exported infinite families
    max_families: int = 64
    max_coeff_degree: int = 16
    max_den_degree: int = 64
    max_num_degree: int = 20000
    # largest grid step searched when exporting infinite runs as families
    max_step: int = 64


@dataclass(frozen=True)
class DivisionConfig:
    budget: int = 256
    window: int = 4
    max_fit_order: int = 16
    max_jumps: int = 64


_limits = Limits()


def get_limits() -> Limits:
    return _limits


@contextlib.contextmanager
def using_limits(**changes):
    global _limits
    saved = _limits
    _limits = replace(saved, **changes)
    try:
        yield _limits
    finally:
        _limits = saved
