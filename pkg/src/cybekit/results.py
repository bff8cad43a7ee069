from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exact identity check.

    ``witness`` is the first failing basis index tuple (0-based) in
    lexicographic order; ``residual`` optionally carries the offending value.
    """

    ok: bool
    witness: tuple | None = None
    residual: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok
