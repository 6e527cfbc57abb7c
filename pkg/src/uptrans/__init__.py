"""Transport of programs and proofs across type equivalences.

A small dependent type checker (explicit universes, de Bruijn indices,
eliminator-style recursion) hosting two relational translations: the
classic binary parametricity translation, and the univalent one whose
type-level witnesses carry an equivalence and a coherence on top of the
relation.  Registered correspondences let terms, statements, and proofs
move between representations (unary and binary naturals, machine words
and bounded naturals), with every output checked by the kernel.
"""

from .env import (
    FLAVOR_PARAM,
    FLAVOR_UNIVALENT,
    GlobalContext,
    GlobalEnv,
    RelTriple,
    empty_context,
)
from .errors import UptransError
from .terms import App, Const, Int16, Lam, Pi, Sort, Term, Var

__all__ = [
    "App",
    "Const",
    "FLAVOR_PARAM",
    "FLAVOR_UNIVALENT",
    "GlobalContext",
    "GlobalEnv",
    "Int16",
    "Lam",
    "Pi",
    "RelTriple",
    "Sort",
    "Term",
    "UptransError",
    "Var",
    "empty_context",
]
