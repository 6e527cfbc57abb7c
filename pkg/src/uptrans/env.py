"""Global environment (constants) and global relational contexts.

The environment maps constant names to entries: a kernel-checked type, an
optional body, a reducibility flag (delta-unfolding is opt-in), and an
origin tag.  Effectiveness reporting keys on origin == "axiom" only, so
opaque trusted lemmas never poison an axiom report.

A GlobalContext is the ordered telescope of relatedness triples
(left constant; right constant; witness term).  Well-formedness is
checked against the prefix, so later triples may mention earlier ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import DuplicateRelation, UnknownConstant
from .terms import Term

# Entry origins.
ORIGIN_DEFINED = "defined"        # has a body, delta-unfoldable when reducible
ORIGIN_AXIOM = "axiom"            # no body; flagged by effectiveness reports
ORIGIN_TRUSTED = "trusted"        # no body (or opaque); trusted prelude lemma
ORIGIN_PRIMITIVE = "primitive"    # built-in inductive machinery / machine ops


@dataclass(frozen=True)
class CtorInfo:
    """Marks a constructor constant: which inductive, and its field count."""

    ind: str
    arity: int


@dataclass(frozen=True)
class ElimInfo:
    """Marks an eliminator constant.

    `ind` keys the iota dispatch table; `arity` is the number of arguments
    the eliminator needs before a step can fire; the scrutinee is the last.
    """

    ind: str
    arity: int


@dataclass(frozen=True)
class EnvEntry:
    name: str
    ty: Term
    body: Optional[Term] = None
    reducible: bool = False
    origin: str = ORIGIN_DEFINED
    ctor: Optional[CtorInfo] = None
    elim: Optional[ElimInfo] = None
    # Machine primitive: (operation name, arity).  Folds on literals only.
    prim: Optional[tuple[str, int]] = None
    # Index of the argument the body immediately eliminates (delta guard),
    # None when the body unfolds unconditionally.  Set at prelude load.
    strict_arg: Optional[int] = None


class GlobalEnv:
    """Name -> EnvEntry map, frozen after prelude load.

    `self_witness` maps constant names to closed witness terms relating a
    constant to itself; the univalent translation consults it after the
    explicit telescope.  Session declarations extend a child environment
    so the shared prelude stays immutable.
    """

    def __init__(self) -> None:
        self._entries: dict[str, EnvEntry] = {}
        self._frozen = False
        self.self_witness: dict[str, Term] = {}

    def add(self, entry: EnvEntry) -> None:
        if self._frozen:
            raise DuplicateRelation("environment is frozen")
        if entry.name in self._entries:
            raise DuplicateRelation(f"constant already declared: {entry.name}")
        self._entries[entry.name] = entry

    def freeze(self) -> None:
        self._frozen = True

    def child(self) -> "GlobalEnv":
        """Unfrozen copy sharing no mutable state with the parent."""
        out = GlobalEnv()
        out._entries = dict(self._entries)
        out.self_witness = dict(self.self_witness)
        return out

    def resolve(self, name: str) -> EnvEntry:
        entry = self._entries.get(name)
        if entry is None:
            raise UnknownConstant(name)
        return entry

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def names(self) -> list[str]:
        return list(self._entries)


# A local context is the tuple of binder types, innermost last.
LocalCtx = tuple[Term, ...]


@dataclass(frozen=True)
class CanonicalEq:
    """Canonical equality structure for a carrier type.

    `can_eq` inhabits forall x y, x = y -> x = y and maps any proof of a
    decidable equality to the canonical one; `law` notes whether the
    normalization law can_eq x x eq_refl = eq_refl was evaluation-checked.
    """

    carrier: Term
    can_eq: Term
    law_checked: bool = False


@dataclass(frozen=True)
class RelTriple:
    """One telescope component: left and right constants plus a witness.

    kind is "type" for type relations (witness is a relation/equivalence/
    coherence triple) and "term" for term relations (witness proves the
    translated relation applied to both constants).
    """

    left: str
    right: str
    witness: Term
    kind: str = "term"
    can_left: Optional[CanonicalEq] = None
    can_right: Optional[CanonicalEq] = None


FLAVOR_UNIVALENT = "univalent"
FLAVOR_PARAM = "param"


@dataclass(frozen=True)
class GlobalContext:
    """Ordered telescope of relatedness triples, checked left to right."""

    flavor: str = FLAVOR_UNIVALENT
    triples: tuple[RelTriple, ...] = ()
    _index: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        idx = {t.left: i for i, t in enumerate(self.triples)}
        object.__setattr__(self, "_index", idx)

    def lookup(self, left: str) -> Optional[RelTriple]:
        i = self._index.get(left)
        return None if i is None else self.triples[i]

    def prefix(self, upto: int) -> "GlobalContext":
        return GlobalContext(self.flavor, self.triples[:upto])

    def with_triple(self, triple: RelTriple) -> "GlobalContext":
        if triple.left in self._index:
            raise DuplicateRelation(
                f"left constant already related: {triple.left}"
            )
        return GlobalContext(self.flavor, self.triples + (triple,))

    def replace_triple(self, triple: RelTriple) -> "GlobalContext":
        """Internal: swap an existing triple (used for canonical-eq attach)."""
        i = self._index[triple.left]
        new = self.triples[:i] + (triple,) + self.triples[i + 1 :]
        return GlobalContext(self.flavor, new)

    def __len__(self) -> int:
        return len(self.triples)


def empty_context(flavor: str = FLAVOR_UNIVALENT) -> GlobalContext:
    return GlobalContext(flavor, ())
