"""Size caps guarding constructors against runaway memory use.

The caps are process-wide configuration, not constants baked into the
algorithms. Use :func:`override_limits` to change them temporarily::

    with override_limits(hadamard_cap=22):
        H = sylvester_hadamard(21)
"""

from __future__ import annotations

import contextlib
import dataclasses
import operator
from typing import Iterator

from .errors import DomainError, ResourceError


@dataclasses.dataclass(frozen=True)
class Limits:
    order_cap: int = 64
    hadamard_cap: int = 20
    # upper bound on rows*cols of any dense matrix built by kronecker()
    max_entries: int = 2**26


_limits = Limits()


def get_limits() -> Limits:
    return _limits


def set_limits(**changes: int) -> Limits:
    """Replace selected caps; returns the previous :class:`Limits`."""
    global _limits
    for name, value in changes.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise DomainError(f"limit {name} must be a nonnegative integer, got {value!r}")
    previous = _limits
    _limits = dataclasses.replace(_limits, **changes)
    return previous


@contextlib.contextmanager
def override_limits(**changes: int) -> Iterator[Limits]:
    previous = set_limits(**changes)
    try:
        yield _limits
    finally:
        set_limits(**dataclasses.asdict(previous))


def check_order(N, *, minimum: int = 0, hadamard: bool = False) -> int:
    """Validate an order argument and return it as a Python int."""
    if isinstance(N, bool):
        raise DomainError(f"order must be an integer, got {N!r}")
    try:
        N = operator.index(N)
    except TypeError:
        raise DomainError(f"order must be an integer, got {N!r}") from None
    if N < minimum:
        raise DomainError(f"order must be >= {minimum}, got {N}")
    cap = _limits.hadamard_cap if hadamard else _limits.order_cap
    if N > cap:
        kind = "Hadamard" if hadamard else "order"
        raise ResourceError(f"N={N} exceeds the configured {kind} cap of {cap}")
    return N
