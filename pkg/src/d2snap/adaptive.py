"""Budget-driven downsampling.

Callers rarely know good values for k, l and m; they know a token
budget.  The adaptive loop probes parameter space along a Halton
sequence, scaled by how oversized the document is relative to a one
megabyte reference, and re-runs the engine until the estimated token
count of the serialized snapshot fits.  Each failed round inflates the
perceived size (s raised to 1.125), pushing the next probe toward more
aggressive parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Protocol

from .core import d2snap
from .dom import DomNode, serialize
from .errors import BudgetError, ContractViolation

__all__ = [
    "TokenEstimator",
    "estimate_tokens",
    "halton",
    "AdaptiveResult",
    "downsample_to_budget",
    "REFERENCE_BYTES",
    "PARAMETER_BASES",
    "GROWTH_EXPONENT",
]

REFERENCE_BYTES = 1_000_000
PARAMETER_BASES = {"k": 5, "l": 3, "m": 2}
GROWTH_EXPONENT = 1.125


class TokenEstimator(Protocol):
    def __call__(self, text: str) -> int: ...


def estimate_tokens(text: str) -> int:
    """Cheap LLM token estimate: one token per four UTF-8 bytes."""
    return math.ceil(len(text.encode("utf-8")) / 4)


def halton(index: int, base: int) -> float:
    """The *index*-th element (1-based) of the Halton sequence for *base*.

    Computed as an exact integer radical inverse with a single float
    division at the end, so low indices come out exact: 1/2, 1/4, 3/4...
    for base 2.
    """
    if index < 1:
        raise ContractViolation(f"halton index must be >= 1, got {index}")
    if base < 2:
        raise ContractViolation(f"halton base must be >= 2, got {base}")
    numerator, denominator = 0, 1
    remaining = index
    while remaining > 0:
        remaining, digit = divmod(remaining, base)
        numerator = numerator * base + digit
        denominator *= base
    return numerator / denominator


@dataclass
class AdaptiveResult:
    snapshot: DomNode
    parameters: tuple[float, float, float]
    iterations: int
    estimated_tokens: int


def downsample_to_budget(root: DomNode, max_tokens: int,
                         max_iterations: int = 5, *,
                         estimator: Callable[[str], int] = estimate_tokens,
                         split_colon: bool = False,
                         rounding: str = "floor",
                         annotate: bool = False) -> AdaptiveResult:
    """Downsample *root* until its snapshot fits *max_tokens*.

    Returns the first fitting snapshot together with the parameters that
    produced it.  After *max_iterations* failed attempts a
    :class:`BudgetError` is raised carrying the smallest snapshot seen,
    so callers can still fall back to a best effort.
    """
    if max_tokens < 1:
        raise ContractViolation(f"max_tokens must be >= 1, got {max_tokens}")
    if max_iterations < 1:
        raise ContractViolation(
            f"max_iterations must be >= 1, got {max_iterations}")

    size = float(len(serialize(root).encode("utf-8")))
    best_snapshot: DomNode | None = None
    best_tokens: int | None = None
    for i in range(1, max_iterations + 1):
        magnitude = size / REFERENCE_BYTES
        k = min(magnitude * halton(i, PARAMETER_BASES["k"]), 1.0)
        l = min(magnitude * halton(i, PARAMETER_BASES["l"]), 1.0)
        m = min(magnitude * halton(i, PARAMETER_BASES["m"]), 1.0)
        snapshot = d2snap(root, k, l, m, split_colon=split_colon,
                          rounding=rounding, annotate=annotate)
        tokens = estimator(serialize(snapshot))
        if best_tokens is None or tokens < best_tokens:
            best_snapshot, best_tokens = snapshot, tokens
        if tokens <= max_tokens:
            return AdaptiveResult(snapshot, (k, l, m), i, tokens)
        size = size ** GROWTH_EXPONENT
    raise BudgetError(
        f"no snapshot fit {max_tokens} tokens in {max_iterations} "
        f"iterations (smallest was {best_tokens})",
        smallest=best_snapshot, estimated_tokens=best_tokens)
