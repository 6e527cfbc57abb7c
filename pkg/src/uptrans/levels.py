"""Naming for level-instantiated constants.

The calculus has no universe polymorphism, so polymorphic library
constants are materialized once per universe level at load time.  The
all-zero instance keeps the bare name; other instances append the level
vector: eq__1, sigT__1_0, sigT_rect__1_0_2.
"""

from __future__ import annotations

LEVEL_CEILING = 3


def lv(base: str, *levels: int) -> str:
    if any(l < 0 or l > LEVEL_CEILING for l in levels):
        raise ValueError(f"level out of range for {base}: {levels}")
    if all(l == 0 for l in levels):
        return base
    return base + "__" + "_".join(str(l) for l in levels)
