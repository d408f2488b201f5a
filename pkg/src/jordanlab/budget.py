"""Enumeration budget shared by the exhaustive code paths.

The default caps p^dim at one million elements and can be overridden with
the JORDANLAB_BUDGET environment variable or per call.
"""

from __future__ import annotations

import os

_FALLBACK = 10 ** 6


def _default_budget() -> int:
    raw = os.environ.get("JORDANLAB_BUDGET")
    if raw:
        try:
            v = int(raw)
            if v > 0:
                return v
        except ValueError:
            pass
    return _FALLBACK


DEFAULT_BUDGET = _default_budget()


class TooLarge(Exception):
    """Exhaustive enumeration would exceed the element budget."""

    def __init__(self, p: int, dim: int, budget: int):
        self.p, self.dim, self.budget = p, dim, budget
        super().__init__(
            f"enumeration of {p}^{dim} elements exceeds budget {budget}")


class CharThreeNeedsExhaustive(Exception):
    """Over F_3 the linearized identity is not sound, and the exhaustive
    check does not fit the budget."""


def check_budget(p: int | None, dim: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of elements p^dim if enumerable within budget, else raises."""
    if p is None:
        raise TooLarge(0, dim, budget)
    n = p ** dim
    if n > budget:
        raise TooLarge(p, dim, budget)
    return n
