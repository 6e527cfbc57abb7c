"""Prelude: built-in inductives, arithmetic, equivalence machinery, corpus."""

from .prelude import Prelude, load_prelude

__all__ = ["Prelude", "load_prelude"]
