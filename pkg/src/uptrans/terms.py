"""Term syntax for the core calculus.

Terms are immutable trees over de Bruijn indices, so alpha-equality is
structural equality.  Every node caches the largest free index occurring
under it (`fv`, -1 when closed); shift and substitution use the cache to
skip closed subtrees, which keeps both O(1) on the large literal towers
the evaluator produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

Level = int


@dataclass(frozen=True, slots=True)
class Sort:
    level: Level
    fv: int = field(default=-1, init=False, compare=False, repr=False)


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    fv: int = field(default=-1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fv", self.index)


@dataclass(frozen=True, slots=True)
class Const:
    name: str
    fv: int = field(default=-1, init=False, compare=False, repr=False)


@dataclass(frozen=True, slots=True)
class Int16:
    """16-bit machine integer literal."""

    value: int
    fv: int = field(default=-1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.value < 1 << 16:
            raise ValueError(f"int16 literal out of range: {self.value}")


@dataclass(frozen=True, slots=True)
class Lam:
    ty: "Term"
    body: "Term"
    fv: int = field(default=-1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fv", max(self.ty.fv, self.body.fv - 1))


@dataclass(frozen=True, slots=True)
class Pi:
    dom: "Term"
    cod: "Term"
    fv: int = field(default=-1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fv", max(self.dom.fv, self.cod.fv - 1))


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"
    fv: int = field(default=-1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fv", max(self.fn.fv, self.arg.fv))


Term = Union[Sort, Var, Const, Int16, Lam, Pi, App]


def shift(t: Term, by: int, cutoff: int = 0) -> Term:
    """Add `by` to every free index >= cutoff."""
    if by == 0 or t.fv < cutoff:
        return t
    ty = type(t)
    if ty is Var:
        return Var(t.index + by)
    if ty is App:
        return App(shift(t.fn, by, cutoff), shift(t.arg, by, cutoff))
    if ty is Lam:
        return Lam(shift(t.ty, by, cutoff), shift(t.body, by, cutoff + 1))
    if ty is Pi:
        return Pi(shift(t.dom, by, cutoff), shift(t.cod, by, cutoff + 1))
    raise AssertionError("leaf with free variables")


def subst(t: Term, value: Term, index: int = 0) -> Term:
    """Substitute `value` for Var(index), lowering the indices above it."""
    if t.fv < index:
        return t
    ty = type(t)
    if ty is Var:
        if t.index == index:
            return shift(value, index)
        if t.index > index:
            return Var(t.index - 1)
        return t
    if ty is App:
        return App(subst(t.fn, value, index), subst(t.arg, value, index))
    if ty is Lam:
        return Lam(subst(t.ty, value, index), subst(t.body, value, index + 1))
    if ty is Pi:
        return Pi(subst(t.dom, value, index), subst(t.cod, value, index + 1))
    raise AssertionError("leaf with free variables")


def apply_spine(fn: Term, *args: Term) -> Term:
    for a in args:
        fn = App(fn, a)
    return fn


def unfold_spine(t: Term) -> tuple[Term, list[Term]]:
    """Split nested applications into (head, args)."""
    args: list[Term] = []
    while type(t) is App:
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def alpha_eq(a: Term, b: Term) -> bool:
    """Structural equality, iterative so literal towers cannot overflow."""
    todo = [(a, b)]
    while todo:
        x, y = todo.pop()
        if x is y:
            continue
        tx = type(x)
        if tx is not type(y):
            return False
        if tx is Var:
            if x.index != y.index:
                return False
        elif tx is Sort:
            if x.level != y.level:
                return False
        elif tx is Const:
            if x.name != y.name:
                return False
        elif tx is Int16:
            if x.value != y.value:
                return False
        elif tx is App:
            todo.append((x.fn, y.fn))
            todo.append((x.arg, y.arg))
        elif tx is Lam:
            todo.append((x.ty, y.ty))
            todo.append((x.body, y.body))
        elif tx is Pi:
            todo.append((x.dom, y.dom))
            todo.append((x.cod, y.cod))
        else:
            return False
    return True


def iter_consts(t: Term):
    """Yield every constant name occurring in t (iterative walk)."""
    todo = [t]
    while todo:
        x = todo.pop()
        tx = type(x)
        if tx is Const:
            yield x.name
        elif tx is App:
            todo.append(x.fn)
            todo.append(x.arg)
        elif tx is Lam:
            todo.append(x.ty)
            todo.append(x.body)
        elif tx is Pi:
            todo.append(x.dom)
            todo.append(x.cod)


def term_size(t: Term, limit: int = 1 << 30) -> int:
    """Node count, capped at limit."""
    n = 0
    todo = [t]
    while todo and n < limit:
        x = todo.pop()
        n += 1
        tx = type(x)
        if tx is App:
            todo.append(x.fn)
            todo.append(x.arg)
        elif tx is Lam or tx is Pi:
            a, b = (x.ty, x.body) if tx is Lam else (x.dom, x.cod)
            todo.append(a)
            todo.append(b)
    return n
