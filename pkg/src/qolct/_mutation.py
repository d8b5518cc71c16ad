"""Defect injection hooks for exercising the verification suite.

``verify --mutate NAME`` plants a known bug so the check suite can prove it
would catch one.  Production code paths consult :func:`active` at the three
documented injection points; with no mutation armed the checks are free.
"""

from __future__ import annotations

from contextlib import contextmanager

MUTATIONS = {
    "right-kernel-sign": "flip the sign of the sine part of the right-hand "
                         "transform kernel in the direct quadrature path",
    "iqft-scale": "drop the 1/(2*pi)^2 normalization of the inverse transform",
    "chirp-sign": "flip the sign of the quadratic pre-chirp phase in the "
                  "factorized forward transform",
}

_current: str | None = None


def active(name: str) -> bool:
    return _current == name


def current() -> str | None:
    return _current


@contextmanager
def inject(name: str | None):
    """Arm a named mutation for the duration of the context."""
    global _current
    if name is not None and name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; known: {sorted(MUTATIONS)}")
    previous = _current
    _current = name
    try:
        yield
    finally:
        _current = previous
