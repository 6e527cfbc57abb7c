"""Self-relatedness witnesses for prelude constants.

The bundle translation consults ``env.self_witness`` whenever it meets a
constant that the ambient relation context leaves unmapped.  This module
fills that table for the shared environment.  Type formers point at
their bundle constants.  Constructors and machine operations receive
computed congruence witnesses.  Eliminators, postulates, and trusted
facts receive trusted self-relatedness statements whose types come from
the relation translation itself.  Ordinary definitions receive derived
witnesses obtained by translating their own bodies.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional

from ..env import ORIGIN_DEFINED, GlobalEnv, empty_context
from ..levels import lv
from ..reduction import DEFAULT_BUDGET, StepCounter, whnf
from ..terms import App, Const, Lam, Pi, Term, Var, apply_spine, iter_consts
from ..translate import uparam_rel, uparam_translate
from .declare import define, trusted

_GROUND = ("nat", "bool", "N", "positive", "int16")

_ZERO_ARY = (
    ("O", "nat"),
    ("true", "bool"),
    ("false", "bool"),
    ("xH", "positive"),
    ("N0", "N"),
)

# name, domain, codomain: constants whose self-relatedness is plain
# congruence of a one-argument function between ground types.
_UNARY = (
    ("S", "nat", "nat"),
    ("xI", "positive", "positive"),
    ("xO", "positive", "positive"),
    ("Npos", "positive", "N"),
    ("int16_to_N", "int16", "N"),
    ("int16_of_N", "N", "int16"),
)

_BINARY_WORD = ("lsl", "add16", "mul16")


def _c(base: str, *levels: int) -> Term:
    return Const(lv(base, *levels))


def selfrel_name(name: str) -> str:
    return "selfrel_" + name


def _selfrel_ty(env: GlobalEnv, name: str) -> Term:
    c = Const(name)
    return uparam_rel(env, empty_context(), env.resolve(name).ty, c, c)


def _lam_nest(env: GlobalEnv, ty: Term, n: int, inner: Term) -> Term:
    """n lambdas whose annotations are the leading Pi domains that ty
    unfolds to, so the witness lines up with its declared type binder
    for binder."""
    counter = StepCounter(DEFAULT_BUDGET)
    doms: list[Term] = []
    for _ in range(n):
        ty = whnf(env, ty, counter, full_delta=True)
        assert type(ty) is Pi
        doms.append(ty.dom)
        ty = ty.cod
    out = inner
    for dom in reversed(doms):
        out = Lam(dom, out)
    return out


def _install_named(env: GlobalEnv, name: str, nbinders: int, inner: Term) -> None:
    ty = _selfrel_ty(env, name)
    define(env, selfrel_name(name), ty, _lam_nest(env, ty, nbinders, inner))
    env.self_witness[name] = Const(selfrel_name(name))


def _install_formers(env: GlobalEnv) -> None:
    for name in _GROUND:
        env.self_witness[name] = Const("fp_" + name)
    for i in (0, 1):
        env.self_witness[lv("list", i)] = _c("fp_list", i)
        env.self_witness[lv("eq", i)] = _c("fp_eq", i)
    for a, b in product((0, 1), repeat=2):
        env.self_witness[lv("sigT", a, b)] = _c("fp_sigma", a, b)


def _install_unary(env: GlobalEnv, cname: str, a: str, b: str) -> None:
    inner = apply_spine(
        _c("ap"), Const(a), Const(b), Const(cname), Var(2), Var(1), Var(0)
    )
    _install_named(env, cname, 3, inner)


def _install_word_op(env: GlobalEnv, op: str) -> None:
    # Binder frame: x 5, x' 4, wx 3, y 2, y' 1, wy 0.  The witness
    # rewrites the left argument first, then the right one.
    i16 = Const("int16")
    f = Const(op)
    here = apply_spine(f, Var(5), Var(2))
    mid = apply_spine(f, Var(4), Var(2))
    there = apply_spine(f, Var(4), Var(1))
    on_left = apply_spine(
        _c("ap"), i16, i16,
        Lam(i16, apply_spine(f, Var(0), Var(3))),
        Var(5), Var(4), Var(3),
    )
    on_right = apply_spine(
        _c("ap"), i16, i16, App(f, Var(4)), Var(2), Var(1), Var(0)
    )
    inner = apply_spine(_c("eq_trans"), i16, here, mid, there, on_left, on_right)
    _install_named(env, op, 6, inner)


def _install_nil(env: GlobalEnv, i: int) -> None:
    _install_named(env, lv("nil", i), 3, _c("true_intro", i))


def _install_cons(env: GlobalEnv, i: int) -> None:
    # Binder frame: A 8, A' 7, wA 6, a 5, a' 4, wa 3, l 2, l' 1, wl 0.
    heads = apply_spine(_c("ur_rel", i), Var(8), Var(7), Var(6), Var(5), Var(4))
    tails = Lam(
        heads,
        apply_spine(
            _c("UR_list", i), Var(9), Var(8),
            apply_spine(_c("ur_rel", i), Var(9), Var(8), Var(7)),
            Var(3), Var(2),
        ),
    )
    inner = apply_spine(_c("existT", i, i), heads, tails, Var(3), Var(0))
    _install_named(env, lv("cons", i), 9, inner)


def _install_pair(env: GlobalEnv, a: int, b: int) -> None:
    # Binder frame: A 11, A' 10, wA 9, P 8, P' 7, wP 6, x 5, x' 4,
    # wx 3, p 2, p' 1, wp 0.
    firsts = apply_spine(_c("ur_rel", a), Var(11), Var(10), Var(9), Var(5), Var(4))
    seconds = Lam(
        firsts,
        apply_spine(
            _c("ur_rel", b),
            App(Var(9), Var(6)),
            App(Var(8), Var(5)),
            apply_spine(Var(7), Var(6), Var(5), Var(0)),
            Var(3), Var(2),
        ),
    )
    inner = apply_spine(_c("existT", a, b), firsts, seconds, Var(3), Var(0))
    _install_named(env, lv("existT", a, b), 12, inner)


def _ground_refl(env: GlobalEnv, name: str) -> Optional[Term]:
    ty = env.resolve(name).ty
    if type(ty) is Const and ty.name in _GROUND:
        return apply_spine(_c("eq_refl"), ty, Const(name))
    return None


def ensure_self_witness(env: GlobalEnv, name: str) -> None:
    """Install a self-witness for one constant.

    Constants of ground type are their own witness by reflexivity.
    Ordinary definitions get a witness derived from the body; anything
    opaque (eliminator, postulate, trusted fact) gets a trusted
    statement whose type is the translated self-relation.
    """
    if name in env.self_witness:
        return
    refl = _ground_refl(env, name)
    if refl is not None:
        env.self_witness[name] = refl
        return
    entry = env.resolve(name)
    if entry.origin == ORIGIN_DEFINED and entry.body is not None:
        wit = uparam_translate(env, empty_context(), entry.body)
        define(env, selfrel_name(name), _selfrel_ty(env, name), wit)
    else:
        trusted(env, selfrel_name(name), _selfrel_ty(env, name))
    env.self_witness[name] = Const(selfrel_name(name))


def populate_self_witnesses(env: GlobalEnv, names: Iterable[str]) -> None:
    """Give every listed constant, and everything its type and body
    mention, a self-witness.  Work proceeds in environment order, so a
    derived witness always finds its prerequisites already installed."""
    want: set[str] = set()
    stack = list(names)
    while stack:
        name = stack.pop()
        if name in want or name in env.self_witness:
            continue
        want.add(name)
        entry = env.resolve(name)
        for t in (entry.ty, entry.body):
            if t is not None:
                stack.extend(c for c in iter_consts(t) if c not in want)
    for name in env.names():
        if name in want:
            ensure_self_witness(env, name)


def install_selfwit(env: GlobalEnv) -> None:
    """Base table for the shared prelude: type formers, constructors,
    and machine operations."""
    _install_formers(env)
    for cname, tyname in _ZERO_ARY:
        env.self_witness[cname] = apply_spine(
            _c("eq_refl"), Const(tyname), Const(cname)
        )
    for cname, a, b in _UNARY:
        _install_unary(env, cname, a, b)
    for op in _BINARY_WORD:
        _install_word_op(env, op)
    for i in (0, 1):
        _install_nil(env, i)
        _install_cons(env, i)
    for a, b in product((0, 1), repeat=2):
        _install_pair(env, a, b)
