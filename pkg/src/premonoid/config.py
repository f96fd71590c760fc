"""Size caps. Each may be overridden through an environment variable.

PREMONOID_MAX_TN     largest n for rule-backed T_n / S_n / singular T_n (default 8)
PREMONOID_MAX_TABLE  largest carrier for which a Cayley table is materialized (default 4096)
PREMONOID_MAX_POWER  largest base monoid for reduced power monoids (default 6)
PREMONOID_MAX_BFS_N  largest n for BFS oracles over T_n (default 6; 7 is opt-in)
"""
from __future__ import annotations

import os

DEFAULT_SEED = 20240101


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def max_tn() -> int:
    return _env_int("PREMONOID_MAX_TN", 8)


def max_table() -> int:
    return _env_int("PREMONOID_MAX_TABLE", 4096)


def max_power_base() -> int:
    return _env_int("PREMONOID_MAX_POWER", 6)


def max_bfs_n() -> int:
    return _env_int("PREMONOID_MAX_BFS_N", 6)
