"""Arithmetic over the core inductives, plus numeric literal codecs.

Unary naturals get the textbook structural definitions.  Binary naturals
(positive with a leading-one digit list, N adding a zero) use the usual
carry/borrow technique: a single structural recursion that returns a
*pair* of functions stands in for mutual recursion, which an
eliminator-only kernel cannot express directly.  Subtraction goes
through masks (a flagged option tracking underflow) and is truncated.

Bounded 16-bit words come in two forms: the machine type int16 whose
operations fold on literals, and the sigma type ZwB16 packing a binary
natural with a proof that it is below 2^16.  trunc16 keeps the low 16
digits of a binary natural and links the two.
"""

from __future__ import annotations

from typing import Optional

from ..env import GlobalEnv
from ..errors import NotALiteral
from ..hoas import Builder, app, arrow, build, c, lam, lift, pi, sortb
from ..reduction import StepCounter, whnf
from ..terms import App, Const, Int16, Sort, Term, apply_spine, unfold_spine
from .declare import define, trusted
from .names import lv


# ---------------------------------------------------------------------------
# Literal codecs (host <-> term).


def mk_nat(value: int) -> Term:
    """Unary literal: S applied `value` times to O."""
    t: Term = Const("O")
    for _ in range(value):
        t = App(Const("S"), t)
    return t


def mk_pos(value: int) -> Term:
    """Binary positive literal; most significant digit is the inner xH."""
    if value < 1:
        raise ValueError("positive literals start at 1")
    t: Term = Const("xH")
    for ch in bin(value)[3:]:
        t = App(Const("xI" if ch == "1" else "xO"), t)
    return t


def mk_N(value: int) -> Term:
    if value < 0:
        raise ValueError("N literals are non-negative")
    return Const("N0") if value == 0 else App(Const("Npos"), mk_pos(value))


def mk_bool(value: bool) -> Term:
    return Const("true" if value else "false")


def mk_list(elem_ty: Term, items: list[Term], level: int = 0) -> Term:
    out: Term = App(Const(lv("nil", level)), elem_ty)
    for item in reversed(items):
        out = apply_spine(Const(lv("cons", level)), elem_ty, item, out)
    return out


def _ctor_of(env: GlobalEnv, t: Term) -> tuple[str, list[Term]]:
    head, args = unfold_spine(t)
    if type(head) is Const and head.name in env:
        entry = env.resolve(head.name)
        if entry.ctor is not None and len(args) == entry.ctor.arity:
            return head.name, args
    raise NotALiteral(f"stuck at {type(t).__name__} head")


def read_nat(env: GlobalEnv, t: Term, budget: int = 10**7) -> int:
    counter = StepCounter(budget)
    n = 0
    while True:
        name, args = _ctor_of(env, whnf(env, t, counter, full_delta=True))
        if name == "O":
            return n
        if name != "S":
            raise NotALiteral(f"not a unary natural: {name}")
        n += 1
        t = args[0]


def read_N(env: GlobalEnv, t: Term, budget: int = 10**7) -> int:
    counter = StepCounter(budget)
    name, args = _ctor_of(env, whnf(env, t, counter, full_delta=True))
    if name == "N0":
        return 0
    if name != "Npos":
        raise NotALiteral(f"not a binary natural: {name}")
    t = args[0]
    bits: list[int] = []
    while True:
        name, args = _ctor_of(env, whnf(env, t, counter, full_delta=True))
        if name == "xH":
            bits.append(1)
            break
        if name not in ("xI", "xO"):
            raise NotALiteral(f"not a binary digit: {name}")
        bits.append(1 if name == "xI" else 0)
        t = args[0]
    value = 0
    for b in reversed(bits):
        value = (value << 1) | b
    return value


def read_bool(env: GlobalEnv, t: Term, budget: int = 10**7) -> bool:
    name, _ = _ctor_of(env, whnf(env, t, StepCounter(budget), full_delta=True))
    if name not in ("true", "false"):
        raise NotALiteral(f"not a boolean: {name}")
    return name == "true"


def read_int16(env: GlobalEnv, t: Term, budget: int = 10**7) -> int:
    h = whnf(env, t, StepCounter(budget), full_delta=True)
    if type(h) is not Int16:
        raise NotALiteral("not an int16 literal")
    return h.value


def prim_eval(op: str, a: int, b: int) -> int:
    """Host mirror of the machine primitives (16-bit wraparound)."""
    if op == "lsl":
        return 0 if b >= 16 else (a << b) & 0xFFFF
    if op == "add16":
        return (a + b) & 0xFFFF
    if op == "mul16":
        return (a * b) & 0xFFFF
    raise ValueError(f"unknown primitive {op}")


# ---------------------------------------------------------------------------
# Case-analysis builders (non-recursive eliminator instances).


def _natcase(T: Builder, n: Builder, z: Builder, s) -> Builder:
    nat = c("nat")
    return app(c(lv("nat_rect", 0)), lam(nat, lambda _: T), z,
               lam(nat, lambda k: lam(T, lambda _: s(k))), n)


def _poscase(T: Builder, p: Builder, fI, fO, vH: Builder) -> Builder:
    pos = c("positive")
    return app(c(lv("positive_rect", 0)), lam(pos, lambda _: T),
               lam(pos, lambda q: lam(T, lambda _: fI(q))),
               lam(pos, lambda q: lam(T, lambda _: fO(q))),
               vH, p)


def _ncase(T: Builder, n: Builder, z: Builder, s) -> Builder:
    return app(c(lv("N_rect", 0)), lam(c("N"), lambda _: T), z,
               lam(c("positive"), lambda p: s(p)), n)


# ---------------------------------------------------------------------------
# Unary arithmetic.


def _unary(env: GlobalEnv) -> None:
    nat = c("nat")
    natrec = c(lv("nat_rect", 0))
    nat2 = arrow(nat, nat)
    binop = build(arrow(nat, arrow(nat, nat)))

    define(env, "plus", binop, build(
        lam(nat, lambda n: lam(nat, lambda m:
            app(natrec, lam(nat, lambda _: nat), m,
                lam(nat, lambda k: lam(nat, lambda r: app(c("S"), r))),
                n)))))
    define(env, "mult", binop, build(
        lam(nat, lambda n: lam(nat, lambda m:
            app(natrec, lam(nat, lambda _: nat), c("O"),
                lam(nat, lambda k: lam(nat, lambda r: app(c("plus"), m, r))),
                n)))))
    define(env, "pow", binop, build(
        lam(nat, lambda b: lam(nat, lambda e:
            app(natrec, lam(nat, lambda _: nat), app(c("S"), c("O")),
                lam(nat, lambda k: lam(nat, lambda r: app(c("mult"), b, r))),
                e)))))
    define(env, "pred", build(arrow(nat, nat)), build(
        lam(nat, lambda n:
            app(natrec, lam(nat, lambda _: nat), c("O"),
                lam(nat, lambda k: lam(nat, lambda r: k)),
                n))))
    # Truncated subtraction; structural on the first argument with an
    # inner case split, so evaluation consumes both numbers in lockstep.
    define(env, "sub", binop, build(
        lam(nat, lambda n: lam(nat, lambda m:
            app(app(natrec, lam(nat, lambda _: nat2),
                    lam(nat, lambda x: c("O")),
                    lam(nat, lambda n2: lam(nat2, lambda rec:
                        lam(nat, lambda x:
                            _natcase(nat, x, app(c("S"), n2),
                                     lambda m2: app(rec, m2))))),
                    n),
                m)))))
    define(env, "leb", build(arrow(nat, arrow(nat, c("bool")))), build(
        lam(nat, lambda n: lam(nat, lambda m:
            app(app(natrec, lam(nat, lambda _: arrow(nat, c("bool"))),
                    lam(nat, lambda x: c("true")),
                    lam(nat, lambda n2: lam(arrow(nat, c("bool")), lambda rec:
                        lam(nat, lambda x:
                            _natcase(c("bool"), x, c("false"),
                                     lambda m2: app(rec, m2))))),
                    n),
                m)))))
    define(env, "square", build(arrow(nat, nat)), build(
        lam(nat, lambda n: app(c("mult"), n, n))))
    define(env, "ge", build(arrow(nat, arrow(nat, sortb(0)))), build(
        lam(nat, lambda n: lam(nat, lambda m:
            app(c("eq"), c("bool"), app(c("leb"), m, n), c("true"))))))


# ---------------------------------------------------------------------------
# Binary positives: successor, addition (carry pair), multiplication.


def _positive_add(env: GlobalEnv) -> None:
    pos = c("positive")
    posrec = c(lv("positive_rect", 0))
    pos2 = arrow(pos, pos)

    define(env, "succ_pos", build(arrow(pos, pos)), build(
        lam(pos, lambda p:
            app(posrec, lam(pos, lambda _: pos),
                lam(pos, lambda q: lam(pos, lambda r: app(c("xO"), r))),
                lam(pos, lambda q: lam(pos, lambda r: app(c("xI"), q))),
                app(c("xO"), c("xH")),
                p))))
    # 2p - 1.
    define(env, "pred_double", build(arrow(pos, pos)), build(
        lam(pos, lambda p:
            app(posrec, lam(pos, lambda _: pos),
                lam(pos, lambda q: lam(pos, lambda r:
                    app(c("xI"), app(c("xO"), q)))),
                lam(pos, lambda q: lam(pos, lambda r: app(c("xI"), r))),
                c("xH"),
                p))))

    fam2 = lam(pos2, lambda _: pos2)
    define(env, "pos_pair", Sort(0), build(app(c("sigT"), pos2, fam2)))

    def mk_pp(f: Builder, g: Builder) -> Builder:
        return app(c("existT"), pos2, fam2, f, g)

    define(env, "pp_fst", build(arrow(c("pos_pair"), pos2)), build(
        lam(c("pos_pair"), lambda pr:
            app(c("sigT_rect"), pos2, fam2,
                lam(c("pos_pair"), lambda _: pos2),
                lam(pos2, lambda f: lam(pos2, lambda g: f)),
                pr))))
    define(env, "pp_snd", build(arrow(c("pos_pair"), pos2)), build(
        lam(c("pos_pair"), lambda pr:
            app(c("sigT_rect"), pos2, fam2,
                lam(c("pos_pair"), lambda _: pos2),
                lam(pos2, lambda f: lam(pos2, lambda g: g)),
                pr))))

    def pfst(rec: Builder, q: Builder) -> Builder:
        return app(c("pp_fst"), rec, q)

    def psnd(rec: Builder, q: Builder) -> Builder:
        return app(c("pp_snd"), rec, q)

    # add_pair p = (fun q => p + q, fun q => p + q + 1), structurally on p.
    br_I = lam(pos, lambda p2: lam(c("pos_pair"), lambda rec: mk_pp(
        lam(pos, lambda q: _poscase(
            pos, q,
            lambda q2: app(c("xO"), psnd(rec, q2)),
            lambda q2: app(c("xI"), pfst(rec, q2)),
            app(c("xO"), app(c("succ_pos"), p2)))),
        lam(pos, lambda q: _poscase(
            pos, q,
            lambda q2: app(c("xI"), psnd(rec, q2)),
            lambda q2: app(c("xO"), psnd(rec, q2)),
            app(c("xI"), app(c("succ_pos"), p2)))))))
    br_O = lam(pos, lambda p2: lam(c("pos_pair"), lambda rec: mk_pp(
        lam(pos, lambda q: _poscase(
            pos, q,
            lambda q2: app(c("xI"), pfst(rec, q2)),
            lambda q2: app(c("xO"), pfst(rec, q2)),
            app(c("xI"), p2))),
        lam(pos, lambda q: _poscase(
            pos, q,
            lambda q2: app(c("xO"), psnd(rec, q2)),
            lambda q2: app(c("xI"), pfst(rec, q2)),
            app(c("xO"), app(c("succ_pos"), p2)))))))
    br_H = mk_pp(
        lam(pos, lambda q: app(c("succ_pos"), q)),
        lam(pos, lambda q: app(c("succ_pos"), app(c("succ_pos"), q))))
    define(env, "add_pair", build(arrow(pos, c("pos_pair"))), build(
        lam(pos, lambda p:
            app(posrec, lam(pos, lambda _: c("pos_pair")), br_I, br_O, br_H, p))))
    define(env, "add_pos", build(arrow(pos, pos2)), build(
        lam(pos, lambda p: lam(pos, lambda q:
            app(c("pp_fst"), app(c("add_pair"), p), q)))))
    # p * q, structurally on p; the doubling accumulator keeps q intact.
    define(env, "mul_pos", build(arrow(pos, pos2)), build(
        lam(pos, lambda p: lam(pos, lambda q:
            app(posrec, lam(pos, lambda _: pos),
                lam(pos, lambda p2: lam(pos, lambda r:
                    app(c("add_pos"), q, app(c("xO"), r)))),
                lam(pos, lambda p2: lam(pos, lambda r: app(c("xO"), r))),
                q,
                p)))))


# ---------------------------------------------------------------------------
# Binary naturals: N adds a zero on top of positive.


def _N_ops(env: GlobalEnv) -> None:
    N = c("N")
    pos = c("positive")

    define(env, "succ_N", build(arrow(N, N)), build(
        lam(N, lambda a: _ncase(N, a, app(c("Npos"), c("xH")),
                                lambda p: app(c("Npos"), app(c("succ_pos"), p))))))
    define(env, "double_N", build(arrow(N, N)), build(
        lam(N, lambda a: _ncase(N, a, c("N0"),
                                lambda p: app(c("Npos"), app(c("xO"), p))))))
    define(env, "succ_double_N", build(arrow(N, N)), build(
        lam(N, lambda a: _ncase(N, a, app(c("Npos"), c("xH")),
                                lambda p: app(c("Npos"), app(c("xI"), p))))))
    nn = build(arrow(N, arrow(N, N)))
    define(env, "add_N", nn, build(
        lam(N, lambda a: lam(N, lambda b:
            _ncase(N, a, b,
                   lambda p: _ncase(N, b, app(c("Npos"), p),
                                    lambda q: app(c("Npos"),
                                                  app(c("add_pos"), p, q))))))))
    define(env, "mul_N", nn, build(
        lam(N, lambda a: lam(N, lambda b:
            _ncase(N, a, c("N0"),
                   lambda p: _ncase(N, b, c("N0"),
                                    lambda q: app(c("Npos"),
                                                  app(c("mul_pos"), p, q))))))))


# ---------------------------------------------------------------------------
# Masks and subtraction (borrow pair), comparison, powers, conversions.


def _subtraction(env: GlobalEnv) -> None:
    N = c("N")
    pos = c("positive")
    posrec = c(lv("positive_rect", 0))
    boolc = c("bool")

    famN = lam(boolc, lambda _: N)
    define(env, "mask", Sort(0), build(app(c("sigT"), boolc, famN)))

    def mk_mask(flag: Builder, value: Builder) -> Builder:
        return app(c("existT"), boolc, famN, flag, value)

    is_nul = mk_mask(c("true"), c("N0"))
    is_neg = mk_mask(c("false"), c("N0"))

    def is_pos(v: Builder) -> Builder:
        return mk_mask(c("true"), app(c("Npos"), v))

    define(env, "mask_flag", build(arrow(c("mask"), boolc)), build(
        lam(c("mask"), lambda m:
            app(c("sigT_rect"), boolc, famN,
                lam(c("mask"), lambda _: boolc),
                lam(boolc, lambda b: lam(N, lambda v: b)),
                m))))
    define(env, "mask_val", build(arrow(c("mask"), N)), build(
        lam(c("mask"), lambda m:
            app(c("sigT_rect"), boolc, famN,
                lam(c("mask"), lambda _: N),
                lam(boolc, lambda b: lam(N, lambda v: v)),
                m))))
    define(env, "double_mask", build(arrow(c("mask"), c("mask"))), build(
        lam(c("mask"), lambda m:
            mk_mask(app(c("mask_flag"), m),
                    app(c("double_N"), app(c("mask_val"), m))))))
    # Underflow absorbs: 2m+1 only applies on the positive flag.
    define(env, "succ_double_mask", build(arrow(c("mask"), c("mask"))), build(
        lam(c("mask"), lambda m:
            app(c(lv("bool_rect", 0)), lam(boolc, lambda _: c("mask")),
                mk_mask(c("true"),
                        app(c("succ_double_N"), app(c("mask_val"), m))),
                is_neg,
                app(c("mask_flag"), m)))))
    define(env, "double_pred_mask", build(arrow(pos, c("mask"))), build(
        lam(pos, lambda x:
            _poscase(c("mask"), x,
                     lambda x2: is_pos(app(c("xO"), app(c("xO"), x2))),
                     lambda x2: is_pos(app(c("xO"), app(c("pred_double"), x2))),
                     is_nul))))

    pm = arrow(pos, c("mask"))
    famM = lam(pm, lambda _: pm)
    define(env, "mask_pair", Sort(0), build(app(c("sigT"), pm, famM)))

    def mk_mp(f: Builder, g: Builder) -> Builder:
        return app(c("existT"), pm, famM, f, g)

    define(env, "mp_fst", build(arrow(c("mask_pair"), pm)), build(
        lam(c("mask_pair"), lambda pr:
            app(c("sigT_rect"), pm, famM,
                lam(c("mask_pair"), lambda _: pm),
                lam(pm, lambda f: lam(pm, lambda g: f)),
                pr))))
    define(env, "mp_snd", build(arrow(c("mask_pair"), pm)), build(
        lam(c("mask_pair"), lambda pr:
            app(c("sigT_rect"), pm, famM,
                lam(c("mask_pair"), lambda _: pm),
                lam(pm, lambda f: lam(pm, lambda g: g)),
                pr))))

    def mfst(rec: Builder, x: Builder) -> Builder:
        return app(c("mp_fst"), rec, x)

    def msnd(rec: Builder, x: Builder) -> Builder:
        return app(c("mp_snd"), rec, x)

    def dm(m: Builder) -> Builder:
        return app(c("double_mask"), m)

    def sdm(m: Builder) -> Builder:
        return app(c("succ_double_mask"), m)

    # sub_pair y = (fun x => x - y, fun x => x - y - 1), structurally on y.
    br_I = lam(pos, lambda y2: lam(c("mask_pair"), lambda rec: mk_mp(
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: dm(mfst(rec, x2)),
            lambda x2: sdm(msnd(rec, x2)),
            is_neg)),
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: sdm(msnd(rec, x2)),
            lambda x2: dm(msnd(rec, x2)),
            is_neg)))))
    br_O = lam(pos, lambda y2: lam(c("mask_pair"), lambda rec: mk_mp(
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: sdm(mfst(rec, x2)),
            lambda x2: dm(mfst(rec, x2)),
            is_neg)),
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: dm(mfst(rec, x2)),
            lambda x2: sdm(msnd(rec, x2)),
            is_neg)))))
    br_H = mk_mp(
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: is_pos(app(c("xO"), x2)),
            lambda x2: is_pos(app(c("pred_double"), x2)),
            is_nul)),
        lam(pos, lambda x: _poscase(
            c("mask"), x,
            lambda x2: is_pos(app(c("pred_double"), x2)),
            lambda x2: app(c("double_pred_mask"), x2),
            is_neg)))
    define(env, "sub_pair", build(arrow(pos, c("mask_pair"))), build(
        lam(pos, lambda y:
            app(posrec, lam(pos, lambda _: c("mask_pair")),
                br_I, br_O, br_H, y))))
    define(env, "sub_mask", build(arrow(pos, arrow(pos, c("mask")))), build(
        lam(pos, lambda x: lam(pos, lambda y:
            app(c("mp_fst"), app(c("sub_pair"), y), x)))))
    define(env, "sub_N", build(arrow(N, arrow(N, N))), build(
        lam(N, lambda a: lam(N, lambda b:
            _ncase(N, a, c("N0"),
                   lambda p: _ncase(N, b, app(c("Npos"), p),
                                    lambda q: app(c("mask_val"),
                                                  app(c("sub_mask"), p, q))))))))
    define(env, "leb_pos", build(arrow(pos, arrow(pos, boolc))), build(
        lam(pos, lambda p: lam(pos, lambda q:
            app(c("mask_flag"), app(c("sub_mask"), q, p))))))
    define(env, "leb_N", build(arrow(N, arrow(N, boolc))), build(
        lam(N, lambda a: lam(N, lambda b:
            _ncase(boolc, a, c("true"),
                   lambda p: _ncase(boolc, b, c("false"),
                                    lambda q: app(c("leb_pos"), p, q)))))))
    define(env, "ltb_N", build(arrow(N, arrow(N, boolc))), build(
        lam(N, lambda a: lam(N, lambda b:
            app(c("leb_N"), app(c("succ_N"), a), b)))))
    define(env, "ge_N", build(arrow(N, arrow(N, sortb(0)))), build(
        lam(N, lambda a: lam(N, lambda b:
            app(c("eq"), boolc, app(c("leb_N"), b, a), c("true"))))))


def _powers_and_conversions(env: GlobalEnv) -> None:
    N = c("N")
    nat = c("nat")
    pos = c("positive")
    posrec = c(lv("positive_rect", 0))

    # b^e by square and multiply on the exponent's digits.  The squared
    # recursive value leads the multiplication so a large thunk is walked
    # once and the literal base is the replicated argument.
    define(env, "pow_pos", build(arrow(pos, arrow(pos, pos))), build(
        lam(pos, lambda b: lam(pos, lambda e:
            app(posrec, lam(pos, lambda _: pos),
                lam(pos, lambda e2: lam(pos, lambda r:
                    app(c("mul_pos"), app(c("mul_pos"), r, r), b))),
                lam(pos, lambda e2: lam(pos, lambda r:
                    app(c("mul_pos"), r, r))),
                b,
                e)))))
    define(env, "pow_N", build(arrow(N, arrow(N, N))), build(
        lam(N, lambda a: lam(N, lambda e:
            _ncase(N, e, app(c("Npos"), c("xH")),
                   lambda q: _ncase(N, a, c("N0"),
                                    lambda p: app(c("Npos"),
                                                  app(c("pow_pos"), p, q))))))))
    define(env, "to_N", build(arrow(nat, N)), build(
        lam(nat, lambda n:
            app(c(lv("nat_rect", 0)), lam(nat, lambda _: N), c("N0"),
                lam(nat, lambda k: lam(N, lambda r: app(c("succ_N"), r))),
                n))))
    define(env, "of_pos", build(arrow(pos, nat)), build(
        lam(pos, lambda p:
            app(posrec, lam(pos, lambda _: nat),
                lam(pos, lambda q: lam(nat, lambda r:
                    app(c("S"), app(c("plus"), r, r)))),
                lam(pos, lambda q: lam(nat, lambda r: app(c("plus"), r, r))),
                app(c("S"), c("O")),
                p))))
    define(env, "of_N", build(arrow(N, nat)), build(
        lam(N, lambda a: _ncase(nat, a, c("O"), lambda p: app(c("of_pos"), p)))))
    # Low k binary digits of a positive, as an N.
    define(env, "trunc_aux", build(arrow(nat, arrow(pos, N))), build(
        lam(nat, lambda k:
            app(c(lv("nat_rect", 0)), lam(nat, lambda _: arrow(pos, N)),
                lam(pos, lambda p: c("N0")),
                lam(nat, lambda k2: lam(arrow(pos, N), lambda rec:
                    lam(pos, lambda p:
                        _poscase(N, p,
                                 lambda q: app(c("succ_double_N"), app(rec, q)),
                                 lambda q: app(c("double_N"), app(rec, q)),
                                 app(c("Npos"), c("xH")))))),
                k))))
    define(env, "trunc16", build(arrow(N, N)), build(
        lam(N, lambda a: _ncase(N, a, c("N0"),
                                lambda p: app(c("trunc_aux"), lift(mk_nat(16)), p)))))


# ---------------------------------------------------------------------------
# Bounded 16-bit words: the sigma form ZwB16 and the int16 bridge.


def _bounded_words(env: GlobalEnv) -> None:
    N = c("N")
    i16 = c("int16")

    define(env, "wB", Const("N"), mk_N(1 << 16))
    define(env, "bounded16", build(arrow(N, sortb(0))), build(
        lam(N, lambda n:
            app(c("eq"), c("bool"), app(c("ltb_N"), n, c("wB")), c("true")))))
    famB = lam(N, lambda n: app(c("bounded16"), n))
    define(env, "ZwB16", Sort(0), build(app(c("sigT"), N, famB)))
    define(env, "zwb_val", build(arrow(c("ZwB16"), N)), build(
        lam(c("ZwB16"), lambda z:
            app(c("sigT_rect"), N, famB,
                lam(c("ZwB16"), lambda _: N),
                lam(N, lambda n: lam(app(c("bounded16"), n), lambda h: n)),
                z))))
    define(env, "zwb_bound",
           build(pi(c("ZwB16"), lambda z:
                    app(c("bounded16"), app(c("zwb_val"), z)))),
           build(lam(c("ZwB16"), lambda z:
                     app(c("sigT_rect"), N, famB,
                         lam(c("ZwB16"), lambda z2:
                             app(c("bounded16"), app(c("zwb_val"), z2))),
                         lam(N, lambda n:
                             lam(app(c("bounded16"), n), lambda h: h)),
                         z))))
    # Both bounds are evaluation-checked facts about 16-digit truncation;
    # they are kept opaque because the kernel has no digit-width induction.
    trusted(env, "trunc16_bounded",
            build(pi(N, lambda n:
                     app(c("bounded16"), app(c("trunc16"), n)))))
    trusted(env, "int16_to_N_bounded",
            build(pi(i16, lambda x:
                     app(c("bounded16"), app(c("int16_to_N"), x)))))

    def mk_zwb(value: Builder, proof: Builder) -> Builder:
        return app(c("existT"), N, famB, value, proof)

    define(env, "to_ZwB", build(arrow(i16, c("ZwB16"))), build(
        lam(i16, lambda x:
            mk_zwb(app(c("int16_to_N"), x), app(c("int16_to_N_bounded"), x)))))
    define(env, "of_ZwB", build(arrow(c("ZwB16"), i16)), build(
        lam(c("ZwB16"), lambda z: app(c("int16_of_N"), app(c("zwb_val"), z)))))
    define(env, "lsl_N", build(arrow(N, arrow(N, N))), build(
        lam(N, lambda n: lam(N, lambda p:
            app(c("trunc16"),
                app(c("mul_N"), n, app(c("pow_N"), lift(mk_N(2)), p)))))))

    zwb2 = build(arrow(c("ZwB16"), arrow(c("ZwB16"), c("ZwB16"))))

    def zwb_op(name: str, pre) -> None:
        define(env, name, zwb2, build(
            lam(c("ZwB16"), lambda s: lam(c("ZwB16"), lambda t:
                mk_zwb(app(c("trunc16"),
                           pre(app(c("zwb_val"), s), app(c("zwb_val"), t))),
                       app(c("trunc16_bounded"),
                           pre(app(c("zwb_val"), s), app(c("zwb_val"), t))))))))

    zwb_op("zwb_lsl",
           lambda a, b: app(c("mul_N"), a, app(c("pow_N"), lift(mk_N(2)), b)))
    zwb_op("zwb_add", lambda a, b: app(c("add_N"), a, b))
    zwb_op("zwb_mul", lambda a, b: app(c("mul_N"), a, b))


def install_arith(env: GlobalEnv) -> None:
    _unary(env)
    _positive_add(env)
    _N_ops(env)
    _subtraction(env)
    _powers_and_conversions(env)
    _bounded_words(env)
