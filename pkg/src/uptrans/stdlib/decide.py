"""Decidable equality for the first-order carriers, and canonical proofs.

Each decider has type forall x y, sum (x = y) (not (x = y)), built from
double case analysis: the diagonal branches recurse and rebuild the
proof with ap on the constructor, the off-diagonal branches refute by
transporting a truth-valued discriminator along the impossible equation.
can_eq composes a decider into forall x y, x = y -> x = y, returning the
*decided* proof; on the diagonal it normalizes to eq_refl no matter what
the input proof contains.
"""

from __future__ import annotations

from ..env import GlobalEnv
from ..hoas import Builder, app, arrow, build, c, lam, pi, sortb
from ..terms import Term
from .declare import define
from .names import lv


def _sum_eq(A: Builder, x: Builder, y: Builder) -> Builder:
    e = app(c("eq"), A, x, y)
    return app(c("sum"), e, app(c("not"), e))


def _inl_eq(A: Builder, x: Builder, y: Builder, proof: Builder) -> Builder:
    e = app(c("eq"), A, x, y)
    return app(c("inl"), e, app(c("not"), e), proof)


def _inr_eq(A: Builder, x: Builder, y: Builder, refut: Builder) -> Builder:
    e = app(c("eq"), A, x, y)
    return app(c("inr"), e, app(c("not"), e), refut)


def _transport(A: Builder, x: Builder, P, base: Builder, y: Builder,
               e: Builder) -> Builder:
    """eq_rect instance: move `base : P x` to `P y` along e : eq A x y."""
    return app(c(lv("eq_rect", 0, 0)), A, x,
               lam(A, lambda a: lam(app(c("eq"), A, x, a), lambda _: P(a))),
               base, y, e)


def _refute(A: Builder, x: Builder, y: Builder, P) -> Builder:
    """fun e : eq A x y => transport of true_intro, where P y = falseT."""
    return lam(app(c("eq"), A, x, y), lambda e:
               _transport(A, x, P, c("true_intro"), y, e))


def _dec_bool(env: GlobalEnv) -> None:
    b = c("bool")
    rect0 = c(lv("bool_rect", 0))
    rect1 = c(lv("bool_rect", 1))

    def P_true(a: Builder) -> Builder:
        return app(rect1, lam(b, lambda _: sortb(0)), c("trueT"), c("falseT"), a)

    def P_false(a: Builder) -> Builder:
        return app(rect1, lam(b, lambda _: sortb(0)), c("falseT"), c("trueT"), a)

    def against(x: Builder, P) -> Builder:
        # dec x y for fixed x, by case on y; diag first when x = true.
        if P is P_true:
            diag, other = c("true"), c("false")
            on_true = _inl_eq(b, diag, c("true"), app(c("eq_refl"), b, c("true")))
            on_false = _inr_eq(b, diag, c("false"), _refute(b, diag, c("false"), P))
        else:
            diag, other = c("false"), c("true")
            on_true = _inr_eq(b, diag, c("true"), _refute(b, diag, c("true"), P))
            on_false = _inl_eq(b, diag, c("false"), app(c("eq_refl"), b, c("false")))
        return lam(b, lambda y:
                   app(rect0, lam(b, lambda y2: _sum_eq(b, x, y2)),
                       on_true, on_false, y))

    ty = build(pi(b, lambda x: pi(b, lambda y: _sum_eq(b, x, y))))
    body = build(
        lam(b, lambda x:
            app(rect0, lam(b, lambda x2: pi(b, lambda y: _sum_eq(b, x2, y))),
                against(c("true"), P_true),
                against(c("false"), P_false),
                x))
    )
    define(env, "dec_bool", ty, body)


def _dec_nat(env: GlobalEnv) -> None:
    nat = c("nat")
    rect0 = c(lv("nat_rect", 0))
    rect1 = c(lv("nat_rect", 1))

    def P_O(a: Builder) -> Builder:
        return app(rect1, lam(nat, lambda _: sortb(0)), c("trueT"),
                   lam(nat, lambda _k: lam(sortb(0), lambda _r: c("falseT"))), a)

    def P_S(a: Builder) -> Builder:
        return app(rect1, lam(nat, lambda _: sortb(0)), c("falseT"),
                   lam(nat, lambda _k: lam(sortb(0), lambda _r: c("trueT"))), a)

    s_fun = lam(nat, lambda n: app(c("S"), n))
    pred_fun = lam(nat, lambda n: app(c("pred"), n))

    base = lam(nat, lambda y:
               app(rect0, lam(nat, lambda y2: _sum_eq(nat, c("O"), y2)),
                   _inl_eq(nat, c("O"), c("O"), app(c("eq_refl"), nat, c("O"))),
                   lam(nat, lambda y2: lam(_sum_eq(nat, c("O"), y2), lambda _:
                       _inr_eq(nat, c("O"), app(c("S"), y2),
                               _refute(nat, c("O"), app(c("S"), y2), P_O)))),
                   y))

    def diag(x2: Builder, y2: Builder, rec: Builder) -> Builder:
        sx, sy = app(c("S"), x2), app(c("S"), y2)
        e_ty = app(c("eq"), nat, x2, y2)
        return app(c("sum_rect"), e_ty, app(c("not"), e_ty),
                   _sum_eq(nat, sx, sy),
                   lam(e_ty, lambda e:
                       _inl_eq(nat, sx, sy,
                               app(c("ap"), nat, nat, s_fun, x2, y2, e))),
                   lam(app(c("not"), e_ty), lambda ne:
                       _inr_eq(nat, sx, sy,
                               lam(app(c("eq"), nat, sx, sy), lambda e:
                                   app(ne, app(c("ap"), nat, nat, pred_fun,
                                               sx, sy, e))))),
                   app(rec, y2))

    step = lam(nat, lambda x2:
               lam(pi(nat, lambda y: _sum_eq(nat, x2, y)), lambda rec:
                   lam(nat, lambda y:
                       app(rect0,
                           lam(nat, lambda y2:
                               _sum_eq(nat, app(c("S"), x2), y2)),
                           _inr_eq(nat, app(c("S"), x2), c("O"),
                                   _refute(nat, app(c("S"), x2), c("O"), P_S)),
                           lam(nat, lambda y2:
                               lam(_sum_eq(nat, app(c("S"), x2), y2), lambda _:
                                   diag(x2, y2, rec))),
                           y))))

    ty = build(pi(nat, lambda x: pi(nat, lambda y: _sum_eq(nat, x, y))))
    body = build(
        lam(nat, lambda x:
            app(rect0,
                lam(nat, lambda x2: pi(nat, lambda y: _sum_eq(nat, x2, y))),
                base, step, x))
    )
    define(env, "dec_nat", ty, body)


def _dec_positive(env: GlobalEnv) -> None:
    pos = c("positive")
    rect0 = c(lv("positive_rect", 0))
    rect1 = c(lv("positive_rect", 1))

    def discr(tI: Builder, tO: Builder, tH: Builder):
        def P(a: Builder) -> Builder:
            return app(rect1, lam(pos, lambda _: sortb(0)),
                       lam(pos, lambda _q: lam(sortb(0), lambda _r: tI)),
                       lam(pos, lambda _q: lam(sortb(0), lambda _r: tO)),
                       tH, a)
        return P

    P_I = discr(c("trueT"), c("falseT"), c("falseT"))
    P_O = discr(c("falseT"), c("trueT"), c("falseT"))
    P_H = discr(c("falseT"), c("falseT"), c("trueT"))

    strip = lam(pos, lambda p:
                app(rect0, lam(pos, lambda _: pos),
                    lam(pos, lambda q: lam(pos, lambda _r: q)),
                    lam(pos, lambda q: lam(pos, lambda _r: q)),
                    c("xH"), p))

    def diag(ctor: str, p2: Builder, y2: Builder, rec: Builder) -> Builder:
        cx, cy = app(c(ctor), p2), app(c(ctor), y2)
        ctor_fun = lam(pos, lambda q: app(c(ctor), q))
        e_ty = app(c("eq"), pos, p2, y2)
        return app(c("sum_rect"), e_ty, app(c("not"), e_ty),
                   _sum_eq(pos, cx, cy),
                   lam(e_ty, lambda e:
                       _inl_eq(pos, cx, cy,
                               app(c("ap"), pos, pos, ctor_fun, p2, y2, e))),
                   lam(app(c("not"), e_ty), lambda ne:
                       _inr_eq(pos, cx, cy,
                               lam(app(c("eq"), pos, cx, cy), lambda e:
                                   app(ne, app(c("ap"), pos, pos, strip,
                                               cx, cy, e))))),
                   app(rec, y2))

    def case_y(x: Builder, onI, onO, onH: Builder) -> Builder:
        # Non-recursive case split on y with the motive sum_eq x y.
        return lam(pos, lambda y:
                   app(rect0, lam(pos, lambda y2: _sum_eq(pos, x, y2)),
                       lam(pos, lambda y2:
                           lam(_sum_eq(pos, x, y2), lambda _: onI(y2))),
                       lam(pos, lambda y2:
                           lam(_sum_eq(pos, x, y2), lambda _: onO(y2))),
                       onH, y))

    def rec_branch(ctor: str, P_self):
        def mk(p2: Builder, rec: Builder) -> Builder:
            x = app(c(ctor), p2)
            return case_y(
                x,
                (lambda y2: diag(ctor, p2, y2, rec)) if ctor == "xI"
                else (lambda y2: _inr_eq(pos, x, app(c("xI"), y2),
                                         _refute(pos, x, app(c("xI"), y2),
                                                 P_self))),
                (lambda y2: diag(ctor, p2, y2, rec)) if ctor == "xO"
                else (lambda y2: _inr_eq(pos, x, app(c("xO"), y2),
                                         _refute(pos, x, app(c("xO"), y2),
                                                 P_self))),
                _inr_eq(pos, x, c("xH"), _refute(pos, x, c("xH"), P_self)),
            )
        return mk

    on_I = rec_branch("xI", P_I)
    on_O = rec_branch("xO", P_O)
    base_H = case_y(
        c("xH"),
        lambda y2: _inr_eq(pos, c("xH"), app(c("xI"), y2),
                           _refute(pos, c("xH"), app(c("xI"), y2), P_H)),
        lambda y2: _inr_eq(pos, c("xH"), app(c("xO"), y2),
                           _refute(pos, c("xH"), app(c("xO"), y2), P_H)),
        _inl_eq(pos, c("xH"), c("xH"), app(c("eq_refl"), pos, c("xH"))),
    )

    dec_ty = lam(pos, lambda x2: pi(pos, lambda y: _sum_eq(pos, x2, y)))
    ty = build(pi(pos, lambda x: pi(pos, lambda y: _sum_eq(pos, x, y))))
    body = build(
        lam(pos, lambda x:
            app(rect0, dec_ty,
                lam(pos, lambda p2:
                    lam(pi(pos, lambda y: _sum_eq(pos, p2, y)), lambda rec:
                        on_I(p2, rec))),
                lam(pos, lambda p2:
                    lam(pi(pos, lambda y: _sum_eq(pos, p2, y)), lambda rec:
                        on_O(p2, rec))),
                base_H, x))
    )
    define(env, "dec_positive", ty, body)


def _dec_N(env: GlobalEnv) -> None:
    N = c("N")
    pos = c("positive")
    nrect0 = c(lv("N_rect", 0))
    nrect1 = c(lv("N_rect", 1))

    def P_N0(a: Builder) -> Builder:
        return app(nrect1, lam(N, lambda _: sortb(0)), c("trueT"),
                   lam(pos, lambda _p: c("falseT")), a)

    def P_Npos(a: Builder) -> Builder:
        return app(nrect1, lam(N, lambda _: sortb(0)), c("falseT"),
                   lam(pos, lambda _p: c("trueT")), a)

    npos_fun = lam(pos, lambda p: app(c("Npos"), p))
    unwrap = lam(N, lambda a:
                 app(nrect0, lam(N, lambda _: pos), c("xH"),
                     lam(pos, lambda p: p), a))

    def case_y(x: Builder, z: Builder, s) -> Builder:
        return lam(N, lambda y:
                   app(nrect0, lam(N, lambda y2: _sum_eq(N, x, y2)),
                       z, lam(pos, lambda q: s(q)), y))

    def diag(p: Builder, q: Builder) -> Builder:
        nx, ny = app(c("Npos"), p), app(c("Npos"), q)
        e_ty = app(c("eq"), pos, p, q)
        return app(c("sum_rect"), e_ty, app(c("not"), e_ty),
                   _sum_eq(N, nx, ny),
                   lam(e_ty, lambda e:
                       _inl_eq(N, nx, ny,
                               app(c("ap"), pos, N, npos_fun, p, q, e))),
                   lam(app(c("not"), e_ty), lambda ne:
                       _inr_eq(N, nx, ny,
                               lam(app(c("eq"), N, nx, ny), lambda e:
                                   app(ne, app(c("ap"), N, pos, unwrap,
                                               nx, ny, e))))),
                   app(c("dec_positive"), p, q))

    ty = build(pi(N, lambda x: pi(N, lambda y: _sum_eq(N, x, y))))
    body = build(
        lam(N, lambda x:
            app(nrect0, lam(N, lambda x2: pi(N, lambda y: _sum_eq(N, x2, y))),
                case_y(c("N0"),
                       _inl_eq(N, c("N0"), c("N0"),
                               app(c("eq_refl"), N, c("N0"))),
                       lambda q: _inr_eq(N, c("N0"), app(c("Npos"), q),
                                         _refute(N, c("N0"),
                                                 app(c("Npos"), q), P_N0))),
                lam(pos, lambda p:
                    case_y(app(c("Npos"), p),
                           _inr_eq(N, app(c("Npos"), p), c("N0"),
                                   _refute(N, app(c("Npos"), p), c("N0"),
                                           P_Npos)),
                           lambda q: diag(p, q))),
                x))
    )
    define(env, "dec_N", ty, body)


def _canonical(env: GlobalEnv) -> None:
    for carrier, dec in (("nat", "dec_nat"), ("bool", "dec_bool"),
                         ("positive", "dec_positive"), ("N", "dec_N")):
        A = c(carrier)

        def can_body(A=A, dec=dec) -> Term:
            return build(
                lam(A, lambda x: lam(A, lambda y:
                    lam(app(c("eq"), A, x, y), lambda e:
                        app(c("sum_rect"),
                            app(c("eq"), A, x, y),
                            app(c("not"), app(c("eq"), A, x, y)),
                            app(c("eq"), A, x, y),
                            lam(app(c("eq"), A, x, y), lambda e0: e0),
                            lam(app(c("not"), app(c("eq"), A, x, y)),
                                lambda nf:
                                app(c("exfalso"), app(c("eq"), A, x, y),
                                    app(nf, e))),
                            app(c(dec), x, y))))))

        ty = build(pi(A, lambda x: pi(A, lambda y:
                      arrow(app(c("eq"), A, x, y), app(c("eq"), A, x, y)))))
        define(env, f"can_{carrier}", ty, can_body())


def install_decide(env: GlobalEnv) -> None:
    _dec_bool(env)
    _dec_nat(env)
    _dec_positive(env)
    _dec_N(env)
    _canonical(env)
