"""Instance-size guardrails for the exponential-time exact routines.

Setting ``KCUT_MAX_N`` in the environment replaces every default below.
"""

import os

from .errors import CapacityError

DP_MAX_N = 20
ORACLE_MAX_N = 12
MATCHING_MAX_N = 16


def max_vertices(default: int) -> int:
    raw = os.environ.get("KCUT_MAX_N")
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise CapacityError(f"KCUT_MAX_N must be an integer, got {raw!r}") from None


def check_capacity(n: int, default: int, what: str) -> None:
    limit = max_vertices(default)
    if n > limit:
        raise CapacityError(
            f"{what} is limited to {limit} vertices, instance has {n} "
            "(set KCUT_MAX_N to override)")
