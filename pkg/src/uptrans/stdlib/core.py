"""Built-in inductive types and machine primitives.

Every universe-polymorphic constant is materialized per level instance up
to the ceiling; the all-zero instance keeps the bare name.  Eliminators
take the scrutinee last and reduce through the iota dispatch table.

The 16-bit machine type has no constructors: its values are literals and
its operations fold eagerly (shifts and arithmetic truncate to 16 bits).
The conversions to and from binary naturals are primitives as well, since
a type without an eliminator admits no defined functions out of it.
"""

from __future__ import annotations

from ..env import ORIGIN_PRIMITIVE, CtorInfo, ElimInfo, EnvEntry, GlobalEnv
from ..hoas import app, arrow, build, c, pi, sortb
from ..terms import Const, Sort, Term
from .names import LEVEL_CEILING, lv

LEVELS = tuple(range(LEVEL_CEILING + 1))


def _add(env: GlobalEnv, name: str, ty: Term, **kw) -> None:
    env.add(EnvEntry(name, ty, origin=ORIGIN_PRIMITIVE, **kw))


def _nat(env: GlobalEnv) -> None:
    nat = c("nat")
    _add(env, "nat", Sort(0))
    _add(env, "O", Const("nat"), ctor=CtorInfo("nat", 0))
    _add(env, "S", build(arrow(nat, nat)), ctor=CtorInfo("nat", 1))
    for j in LEVELS:
        ty = build(
            pi(
                arrow(nat, sortb(j)),
                lambda P: arrow(
                    app(P, c("O")),
                    arrow(
                        pi(nat, lambda n: arrow(app(P, n), app(P, app(c("S"), n)))),
                        pi(nat, lambda n: app(P, n)),
                    ),
                ),
            )
        )
        _add(env, lv("nat_rect", j), ty, elim=ElimInfo("nat", 4))


def _bool(env: GlobalEnv) -> None:
    b = c("bool")
    _add(env, "bool", Sort(0))
    _add(env, "true", Const("bool"), ctor=CtorInfo("bool", 0))
    _add(env, "false", Const("bool"), ctor=CtorInfo("bool", 0))
    for j in LEVELS:
        ty = build(
            pi(
                arrow(b, sortb(j)),
                lambda P: arrow(
                    app(P, c("true")),
                    arrow(app(P, c("false")), pi(b, lambda x: app(P, x))),
                ),
            )
        )
        _add(env, lv("bool_rect", j), ty, elim=ElimInfo("bool", 4))


def _positive(env: GlobalEnv) -> None:
    pos = c("positive")
    _add(env, "positive", Sort(0))
    _add(env, "xI", build(arrow(pos, pos)), ctor=CtorInfo("positive", 1))
    _add(env, "xO", build(arrow(pos, pos)), ctor=CtorInfo("positive", 1))
    _add(env, "xH", Const("positive"), ctor=CtorInfo("positive", 0))
    for j in LEVELS:
        ty = build(
            pi(
                arrow(pos, sortb(j)),
                lambda P: arrow(
                    pi(pos, lambda p: arrow(app(P, p), app(P, app(c("xI"), p)))),
                    arrow(
                        pi(pos, lambda p: arrow(app(P, p), app(P, app(c("xO"), p)))),
                        arrow(app(P, c("xH")), pi(pos, lambda p: app(P, p))),
                    ),
                ),
            )
        )
        _add(env, lv("positive_rect", j), ty, elim=ElimInfo("positive", 5))


def _N(env: GlobalEnv) -> None:
    n = c("N")
    pos = c("positive")
    _add(env, "N", Sort(0))
    _add(env, "N0", Const("N"), ctor=CtorInfo("N", 0))
    _add(env, "Npos", build(arrow(pos, n)), ctor=CtorInfo("N", 1))
    for j in LEVELS:
        ty = build(
            pi(
                arrow(n, sortb(j)),
                lambda P: arrow(
                    app(P, c("N0")),
                    arrow(
                        pi(pos, lambda p: app(P, app(c("Npos"), p))),
                        pi(n, lambda x: app(P, x)),
                    ),
                ),
            )
        )
        _add(env, lv("N_rect", j), ty, elim=ElimInfo("N", 4))


def _list(env: GlobalEnv) -> None:
    for i in LEVELS:
        li = lv("list", i)
        _add(env, li, build(arrow(sortb(i), sortb(i))))
        _add(
            env,
            lv("nil", i),
            build(pi(sortb(i), lambda A: app(c(li), A))),
            ctor=CtorInfo("list", 1),
        )
        _add(
            env,
            lv("cons", i),
            build(
                pi(
                    sortb(i),
                    lambda A: arrow(A, arrow(app(c(li), A), app(c(li), A))),
                )
            ),
            ctor=CtorInfo("list", 3),
        )
    for i in LEVELS:
        for j in LEVELS:
            li = lv("list", i)
            ty = build(
                pi(
                    sortb(i),
                    lambda A: pi(
                        arrow(app(c(li), A), sortb(j)),
                        lambda P: arrow(
                            app(P, app(c(lv("nil", i)), A)),
                            arrow(
                                pi(
                                    A,
                                    lambda a: pi(
                                        app(c(li), A),
                                        lambda l: arrow(
                                            app(P, l),
                                            app(
                                                P,
                                                app(c(lv("cons", i)), A, a, l),
                                            ),
                                        ),
                                    ),
                                ),
                                pi(app(c(li), A), lambda l: app(P, l)),
                            ),
                        ),
                    ),
                )
            )
            _add(env, lv("list_rect", i, j), ty, elim=ElimInfo("list", 5))


def _sigT(env: GlobalEnv) -> None:
    for a in LEVELS:
        for b in LEVELS:
            si = lv("sigT", a, b)
            m = max(a, b)
            _add(
                env,
                si,
                build(pi(sortb(a), lambda A: arrow(arrow(A, sortb(b)), sortb(m)))),
            )
            _add(
                env,
                lv("existT", a, b),
                build(
                    pi(
                        sortb(a),
                        lambda A: pi(
                            arrow(A, sortb(b)),
                            lambda P: pi(
                                A, lambda x: arrow(app(P, x), app(c(si), A, P))
                            ),
                        ),
                    )
                ),
                ctor=CtorInfo("sigT", 4),
            )
    for a in LEVELS:
        for b in LEVELS:
            si = lv("sigT", a, b)
            ex = lv("existT", a, b)
            for j in LEVELS:
                ty = build(
                    pi(
                        sortb(a),
                        lambda A: pi(
                            arrow(A, sortb(b)),
                            lambda P: pi(
                                arrow(app(c(si), A, P), sortb(j)),
                                lambda Q: arrow(
                                    pi(
                                        A,
                                        lambda x: pi(
                                            app(P, x),
                                            lambda p: app(
                                                Q, app(c(ex), A, P, x, p)
                                            ),
                                        ),
                                    ),
                                    pi(app(c(si), A, P), lambda s: app(Q, s)),
                                ),
                            ),
                        ),
                    )
                )
                _add(env, lv("sigT_rect", a, b, j), ty, elim=ElimInfo("sigT", 5))


def _eq(env: GlobalEnv) -> None:
    for i in LEVELS:
        ei = lv("eq", i)
        _add(env, ei, build(pi(sortb(i), lambda A: arrow(A, arrow(A, sortb(i))))))
        _add(
            env,
            lv("eq_refl", i),
            build(pi(sortb(i), lambda A: pi(A, lambda x: app(c(ei), A, x, x)))),
            ctor=CtorInfo("eq", 2),
        )
    for i in LEVELS:
        ei = lv("eq", i)
        refl = lv("eq_refl", i)
        for j in LEVELS:
            ty = build(
                pi(
                    sortb(i),
                    lambda A: pi(
                        A,
                        lambda x: pi(
                            pi(A, lambda a: arrow(app(c(ei), A, x, a), sortb(j))),
                            lambda P: arrow(
                                app(P, x, app(c(refl), A, x)),
                                pi(
                                    A,
                                    lambda y: pi(
                                        app(c(ei), A, x, y),
                                        lambda e: app(P, y, e),
                                    ),
                                ),
                            ),
                        ),
                    ),
                )
            )
            _add(env, lv("eq_rect", i, j), ty, elim=ElimInfo("eq", 6))


def _int16(env: GlobalEnv) -> None:
    i16 = c("int16")
    _add(env, "int16", Sort(0))
    binop = build(arrow(i16, arrow(i16, i16)))
    for op in ("lsl", "add16", "mul16"):
        _add(env, op, binop, prim=(op, 2))
    _add(env, "int16_to_N", build(arrow(i16, c("N"))), prim=("int16_to_N", 1))
    _add(env, "int16_of_N", build(arrow(c("N"), i16)), prim=("int16_of_N", 1))


def install_core(env: GlobalEnv) -> None:
    _nat(env)
    _bool(env)
    _positive(env)
    _N(env)
    _list(env)
    _sigT(env)
    _eq(env)
    _int16(env)
