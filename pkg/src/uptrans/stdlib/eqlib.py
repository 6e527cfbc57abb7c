"""Equality combinators, truth encodings, and tagged sums.

Everything here is a plain definition over the core inductives.  The
combinators ap, eq_sym, and eq_trans are the usual eq_rect instances.
Truth at universe level 0 is the boolean equation true = true so the
decidable-equality machinery stays first order; at higher levels it is
the polymorphic identity type.  Sums are a sigma over a boolean tag,
which avoids introducing any new inductive.
"""

from __future__ import annotations

from ..env import GlobalEnv
from ..hoas import Builder, app, arrow, build, c, lam, pi, sortb
from ..terms import Sort
from .declare import define
from .names import lv

EQ_LEVELS = (0, 1, 2)


def _eq(i: int, A: Builder, x: Builder, y: Builder) -> Builder:
    return app(c(lv("eq", i)), A, x, y)


def _refl(i: int, A: Builder, x: Builder) -> Builder:
    return app(c(lv("eq_refl", i)), A, x)


def _ap(env: GlobalEnv, i: int) -> None:
    ty = build(
        pi(sortb(i), lambda A:
            pi(sortb(i), lambda B:
                pi(arrow(A, B), lambda f:
                    pi(A, lambda x:
                        pi(A, lambda y:
                            arrow(_eq(i, A, x, y),
                                  _eq(i, B, app(f, x), app(f, y))))))))
    )
    body = build(
        lam(sortb(i), lambda A:
            lam(sortb(i), lambda B:
                lam(arrow(A, B), lambda f:
                    lam(A, lambda x:
                        lam(A, lambda y:
                            lam(_eq(i, A, x, y), lambda e:
                                app(c(lv("eq_rect", i, i)), A, x,
                                    lam(A, lambda a:
                                        lam(_eq(i, A, x, a), lambda _:
                                            _eq(i, B, app(f, x), app(f, a)))),
                                    _refl(i, B, app(f, x)),
                                    y, e)))))))
    )
    define(env, lv("ap", i), ty, body)


def _eq_sym(env: GlobalEnv, i: int) -> None:
    ty = build(
        pi(sortb(i), lambda A:
            pi(A, lambda x:
                pi(A, lambda y:
                    arrow(_eq(i, A, x, y), _eq(i, A, y, x)))))
    )
    body = build(
        lam(sortb(i), lambda A:
            lam(A, lambda x:
                lam(A, lambda y:
                    lam(_eq(i, A, x, y), lambda e:
                        app(c(lv("eq_rect", i, i)), A, x,
                            lam(A, lambda a:
                                lam(_eq(i, A, x, a), lambda _:
                                    _eq(i, A, a, x))),
                            _refl(i, A, x),
                            y, e)))))
    )
    define(env, lv("eq_sym", i), ty, body)


def _eq_trans(env: GlobalEnv, i: int) -> None:
    ty = build(
        pi(sortb(i), lambda A:
            pi(A, lambda x:
                pi(A, lambda y:
                    pi(A, lambda z:
                        arrow(_eq(i, A, x, y),
                              arrow(_eq(i, A, y, z), _eq(i, A, x, z)))))))
    )
    body = build(
        lam(sortb(i), lambda A:
            lam(A, lambda x:
                lam(A, lambda y:
                    lam(A, lambda z:
                        lam(_eq(i, A, x, y), lambda e1:
                            lam(_eq(i, A, y, z), lambda e2:
                                app(c(lv("eq_rect", i, i)), A, y,
                                    lam(A, lambda a:
                                        lam(_eq(i, A, y, a), lambda _:
                                            _eq(i, A, x, a))),
                                    e1,
                                    z, e2)))))))
    )
    define(env, lv("eq_trans", i), ty, body)


def _truth(env: GlobalEnv) -> None:
    boolb = c("bool")
    define(env, "trueT", Sort(0), build(_eq(0, boolb, c("true"), c("true"))))
    define(env, "falseT", Sort(0), build(_eq(0, boolb, c("true"), c("false"))))
    define(env, "true_intro", build(c("trueT")), build(_refl(0, boolb, c("true"))))
    for i in (1, 2):
        define(env, lv("trueT", i), Sort(i),
               build(pi(sortb(i - 1), lambda X: arrow(X, X))))
        define(env, lv("falseT", i), Sort(i),
               build(pi(sortb(i - 1), lambda X: X)))
        define(env, lv("true_intro", i), build(c(lv("trueT", i))),
               build(lam(sortb(i - 1), lambda X: lam(X, lambda x: x))))
    define(env, "not", build(arrow(sortb(0), sortb(0))),
           build(lam(sortb(0), lambda X: arrow(X, c("falseT")))))


def _exfalso(env: GlobalEnv) -> None:
    ty = build(pi(sortb(0), lambda C: arrow(c("falseT"), C)))
    body = build(
        lam(sortb(0), lambda C:
            lam(c("falseT"), lambda h:
                app(c(lv("eq_rect", 0, 0)), c("bool"), c("true"),
                    lam(c("bool"), lambda b:
                        lam(_eq(0, c("bool"), c("true"), b), lambda _:
                            app(c(lv("bool_rect", 1)),
                                lam(c("bool"), lambda _b: sortb(0)),
                                c("trueT"), C, b))),
                    c("true_intro"),
                    c("false"), h)))
    )
    define(env, "exfalso", ty, body)


def _sum_fam(X: Builder, Y: Builder) -> Builder:
    return lam(c("bool"), lambda b:
               app(c(lv("bool_rect", 1)),
                   lam(c("bool"), lambda _: sortb(0)), X, Y, b))


def _sums(env: GlobalEnv) -> None:
    define(env, "sum",
           build(arrow(sortb(0), arrow(sortb(0), sortb(0)))),
           build(lam(sortb(0), lambda X:
                     lam(sortb(0), lambda Y:
                         app(c("sigT"), c("bool"), _sum_fam(X, Y))))))
    define(env, "inl",
           build(pi(sortb(0), lambda X:
                    pi(sortb(0), lambda Y:
                        arrow(X, app(c("sum"), X, Y))))),
           build(lam(sortb(0), lambda X:
                     lam(sortb(0), lambda Y:
                         lam(X, lambda x:
                             app(c("existT"), c("bool"), _sum_fam(X, Y),
                                 c("true"), x))))))
    define(env, "inr",
           build(pi(sortb(0), lambda X:
                    pi(sortb(0), lambda Y:
                        arrow(Y, app(c("sum"), X, Y))))),
           build(lam(sortb(0), lambda X:
                     lam(sortb(0), lambda Y:
                         lam(Y, lambda y:
                             app(c("existT"), c("bool"), _sum_fam(X, Y),
                                 c("false"), y))))))
    ty = build(
        pi(sortb(0), lambda X:
            pi(sortb(0), lambda Y:
                pi(sortb(0), lambda C:
                    arrow(arrow(X, C),
                          arrow(arrow(Y, C),
                                arrow(app(c("sum"), X, Y), C))))))
    )
    body = build(
        lam(sortb(0), lambda X:
            lam(sortb(0), lambda Y:
                lam(sortb(0), lambda C:
                    lam(arrow(X, C), lambda f:
                        lam(arrow(Y, C), lambda g:
                            lam(app(c("sum"), X, Y), lambda s:
                                app(c("sigT_rect"), c("bool"), _sum_fam(X, Y),
                                    lam(app(c("sigT"), c("bool"), _sum_fam(X, Y)),
                                        lambda _: C),
                                    lam(c("bool"), lambda b:
                                        lam(app(_sum_fam(X, Y), b), lambda v:
                                            app(app(c(lv("bool_rect", 0)),
                                                    lam(c("bool"), lambda b2:
                                                        arrow(app(_sum_fam(X, Y), b2), C)),
                                                    f, g, b),
                                                v))),
                                    s)))))))
    )
    define(env, "sum_rect", ty, body)


def install_eqlib(env: GlobalEnv) -> None:
    for i in EQ_LEVELS:
        _ap(env, i)
        _eq_sym(env, i)
        _eq_trans(env, i)
    _truth(env)
    _exfalso(env)
    _sums(env)
