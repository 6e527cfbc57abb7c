"""Naming for level-instantiated prelude constants.

Re-exported from the core levels module so the standard library and the
translators agree on one naming scheme.
"""

from __future__ import annotations

from ..levels import LEVEL_CEILING, lv

__all__ = ["LEVEL_CEILING", "lv"]
