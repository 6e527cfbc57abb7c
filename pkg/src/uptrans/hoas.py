"""Higher-order builders for de Bruijn terms.

A builder is a function from the current binder depth to a Term; lam/pi
hand the callback a builder for the bound variable, and `build` closes
the construction at depth 0.  This keeps the larger prelude definitions
legible without hand-counting indices.
"""

from __future__ import annotations

from typing import Callable

from .terms import App, Const, Int16, Lam, Pi, Sort, Term, Var

Builder = Callable[[int], Term]


def build(b: Builder) -> Term:
    return b(0)


def c(name: str) -> Builder:
    t = Const(name)
    return lambda d: t


def sortb(level: int) -> Builder:
    t = Sort(level)
    return lambda d: t


def i16(value: int) -> Builder:
    t = Int16(value)
    return lambda d: t


def lift(t: Term) -> Builder:
    """Embed a closed term."""
    if t.fv >= 0:
        raise ValueError("lift expects a closed term")
    return lambda d: t


def app(fn: Builder, *args: Builder) -> Builder:
    def mk(d: int) -> Term:
        out = fn(d)
        for a in args:
            out = App(out, a(d))
        return out

    return mk


def lam(ty: Builder, f: Callable[[Builder], Builder]) -> Builder:
    def mk(d: int) -> Term:
        var: Builder = lambda d2: Var(d2 - d - 1)
        return Lam(ty(d), f(var)(d + 1))

    return mk


def pi(ty: Builder, f: Callable[[Builder], Builder]) -> Builder:
    def mk(d: int) -> Term:
        var: Builder = lambda d2: Var(d2 - d - 1)
        return Pi(ty(d), f(var)(d + 1))

    return mk


def arrow(a: Builder, b: Builder) -> Builder:
    """Non-dependent function space."""
    return pi(a, lambda _: b)


def lams(tys: list[Builder], f: Callable[..., Builder]) -> Builder:
    """n-ary lam: f receives one variable builder per binder."""

    def go(acc: list[Builder], rest: list[Builder]) -> Builder:
        if not rest:
            return f(*acc)
        return lam(rest[0], lambda v: go(acc + [v], rest[1:]))

    return go([], tys)


def pis(tys: list[Builder], f: Callable[..., Builder]) -> Builder:
    def go(acc: list[Builder], rest: list[Builder]) -> Builder:
        if not rest:
            return f(*acc)
        return pi(rest[0], lambda v: go(acc + [v], rest[1:]))

    return go([], tys)
