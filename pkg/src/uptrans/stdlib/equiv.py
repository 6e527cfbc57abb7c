"""Equivalences, relatedness bundles, and witnesses for the built-in formers.

An equivalence between A and B is a nested dependent pair: a forward
map, an inverse, a section, a retraction, and one triangle coherence
relating them.  A relatedness bundle over A and B packs a binary
relation together with an equivalence and a pointwise coherence stating
that being related to b is equivalent to being equal to the image of b.
Type translation produces such bundles, and this module supplies the
closed machinery the translated terms refer to:

  * generic first and second projections out of dependent pairs,
  * the equivalence record former with accessors, identity, and inverse,
  * the two postulates (function extensionality and univalence),
  * the dependent-product equivalence, whose forward and backward maps
    are ordinary programs and compute, while its section and retraction
    go through function extensionality,
  * the bundle for the universe itself, derived from univalence,
  * diagonal bundles for the ground types, and bundles for lists,
    dependent pairs, and equality types.

Everything with computational content is installed as a transparent
definition so transported programs normalize.  Statements that genuinely
need a postulate are wired through it explicitly, so a stuck normal form
names exactly the postulates it rests on.  Remaining pointwise facts are
installed as trusted statements without a body: opaque to reduction, but
not reported as postulates.
"""

from __future__ import annotations

from itertools import product

from ..levels import lv
from ..terms import App, Const, Lam, Pi, Sort, Term, Var, apply_spine, shift
from ..translate import bundle_parts, coh_ty, mk_ur_value, ur_rel_at, ur_type_at
from .declare import axiom, define, trusted

LEVELS = (0, 1, 2)
PI_LEVELS = tuple(product(LEVELS, repeat=2))
PAIR_LEVELS = tuple(product((0, 1), repeat=2))
GROUND_TYPES = ("nat", "bool", "N", "positive", "int16")


def _c(base: str, *levels: int) -> Term:
    return Const(lv(base, *levels))


def _equiv_app(m: int, a: Term, b: Term) -> Term:
    return apply_spine(_c("Equiv", m), a, b)


def _urty_app(m: int, a: Term, b: Term) -> Term:
    return apply_spine(_c("ur_type", m), a, b)


# ---------------------------------------------------------------------------
# Dependent pair projections.


def _sig_app(a: int, b: int, A: Term, P: Term) -> Term:
    return apply_spine(_c("sigT", a, b), A, P)


def _install_projections(env) -> None:
    for a, b in product(range(4), repeat=2):
        fam = Pi(Var(0), Sort(b))
        sig = _sig_app(a, b, Var(1), Var(0))
        proj1_ty = Pi(Sort(a), Pi(fam, Pi(sig, Var(2))))
        motive1 = Lam(_sig_app(a, b, Var(2), Var(1)), Var(3))
        branch1 = Lam(Var(2), Lam(App(Var(2), Var(0)), Var(1)))
        proj1_body = Lam(
            Sort(a),
            Lam(
                fam,
                Lam(
                    sig,
                    apply_spine(
                        _c("sigT_rect", a, b, a),
                        Var(2),
                        Var(1),
                        motive1,
                        branch1,
                        Var(0),
                    ),
                ),
            ),
        )
        define(env, lv("proj1_sig", a, b), proj1_ty, proj1_body)

        proj1_here = apply_spine(_c("proj1_sig", a, b), Var(2), Var(1), Var(0))
        proj2_ty = Pi(Sort(a), Pi(fam, Pi(sig, App(Var(1), proj1_here))))
        motive2 = Lam(
            _sig_app(a, b, Var(2), Var(1)),
            App(Var(2), apply_spine(_c("proj1_sig", a, b), Var(3), Var(2), Var(0))),
        )
        branch2 = Lam(Var(2), Lam(App(Var(2), Var(0)), Var(0)))
        proj2_body = Lam(
            Sort(a),
            Lam(
                fam,
                Lam(
                    sig,
                    apply_spine(
                        _c("sigT_rect", a, b, b),
                        Var(2),
                        Var(1),
                        motive2,
                        branch2,
                        Var(0),
                    ),
                ),
            ),
        )
        define(env, lv("proj2_sig", a, b), proj2_ty, proj2_body)


# ---------------------------------------------------------------------------
# The equivalence record.
#
# Fields, in order: forward map, inverse, section, retraction, triangle
# coherence.  The record is a right-nested dependent pair; _comp_ty gives
# the type of field idx over current-frame endpoints a and b, given the
# values of the earlier fields it depends on.


def _comp_ty(m: int, idx: int, a: Term, b: Term, fixed: list[Term]) -> Term:
    if idx == 0:
        return Pi(a, shift(b, 1))
    if idx == 1:
        return Pi(b, shift(a, 1))
    if idx == 2:
        f, g = shift(fixed[0], 1), shift(fixed[1], 1)
        return Pi(
            a,
            apply_spine(
                _c("eq", m), shift(a, 1), App(g, App(f, Var(0))), Var(0)
            ),
        )
    if idx == 3:
        f, g = shift(fixed[0], 1), shift(fixed[1], 1)
        return Pi(
            b,
            apply_spine(
                _c("eq", m), shift(b, 1), App(f, App(g, Var(0))), Var(0)
            ),
        )
    f, g, s, r = (shift(t, 1) for t in fixed)
    a1, b1 = shift(a, 1), shift(b, 1)
    fx = App(f, Var(0))
    gfx = App(g, fx)
    inner = apply_spine(_c("eq", m), b1, App(f, gfx), fx)
    lhs = apply_spine(_c("ap", m), a1, b1, f, gfx, Var(0), App(s, Var(0)))
    rhs = App(r, fx)
    return Pi(a, apply_spine(_c("eq", m), inner, lhs, rhs))


def _equiv_tail(m: int, a: Term, b: Term, fixed: list[Term]) -> Term:
    idx = len(fixed)
    ty = _comp_ty(m, idx, a, b, fixed)
    if idx == 4:
        return ty
    fam = Lam(
        ty,
        _equiv_tail(
            m,
            shift(a, 1),
            shift(b, 1),
            [shift(t, 1) for t in fixed] + [Var(0)],
        ),
    )
    return apply_spine(_c("sigT", m, m), ty, fam)


def equiv_at(m: int, a: Term, b: Term) -> Term:
    """The equivalence record type over a and b, spelled as its pair nest."""
    return _equiv_tail(m, a, b, [])


def mk_equiv(
    m: int,
    a: Term,
    b: Term,
    fun: Term,
    inv: Term,
    sect: Term,
    retr: Term,
    adj: Term,
) -> Term:
    """Package the five fields as an inhabitant of the record over a and b."""
    comps = (fun, inv, sect, retr, adj)

    def nest(fixed: list[Term], k: int) -> Term:
        if k == 4:
            return comps[4]
        ty = _comp_ty(m, k, a, b, fixed)
        fam = Lam(
            ty,
            _equiv_tail(
                m,
                shift(a, 1),
                shift(b, 1),
                [shift(t, 1) for t in fixed] + [Var(0)],
            ),
        )
        return apply_spine(
            _c("existT", m, m), ty, fam, comps[k], nest(fixed + [comps[k]], k + 1)
        )

    return nest([], 0)


def _record_proj(m: int, a: Term, b: Term, scrut: Term, target: int) -> Term:
    fixed: list[Term] = []
    cur = scrut
    for k in range(target):
        ty = _comp_ty(m, k, a, b, fixed)
        fam = Lam(
            ty,
            _equiv_tail(
                m,
                shift(a, 1),
                shift(b, 1),
                [shift(t, 1) for t in fixed] + [Var(0)],
            ),
        )
        head = apply_spine(_c("proj1_sig", m, m), ty, fam, cur)
        cur = apply_spine(_c("proj2_sig", m, m), ty, fam, cur)
        fixed.append(head)
    if target == 4:
        return cur
    ty = _comp_ty(m, target, a, b, fixed)
    fam = Lam(
        ty,
        _equiv_tail(
            m,
            shift(a, 1),
            shift(b, 1),
            [shift(t, 1) for t in fixed] + [Var(0)],
        ),
    )
    return apply_spine(_c("proj1_sig", m, m), ty, fam, cur)


_ACCESSORS = ("e_fun", "e_inv", "e_sect", "e_retr", "e_adj")


def _acc_fixed(m: int, target: int) -> list[Term]:
    if target < 2:
        return []
    out = [
        apply_spine(_c(name, m), Var(2), Var(1), Var(0))
        for name in _ACCESSORS[: 2 if target < 4 else 4]
    ]
    return out


def _install_equiv_record(env) -> None:
    for m in LEVELS:
        define(
            env,
            lv("Equiv", m),
            Pi(Sort(m), Pi(Sort(m), Sort(m))),
            Lam(Sort(m), Lam(Sort(m), equiv_at(m, Var(1), Var(0)))),
        )
        for target, name in enumerate(_ACCESSORS):
            ty = Pi(
                Sort(m),
                Pi(
                    Sort(m),
                    Pi(
                        _equiv_app(m, Var(1), Var(0)),
                        _comp_ty(m, target, Var(2), Var(1), _acc_fixed(m, target)),
                    ),
                ),
            )
            body = Lam(
                Sort(m),
                Lam(
                    Sort(m),
                    Lam(
                        _equiv_app(m, Var(1), Var(0)),
                        _record_proj(m, Var(2), Var(1), Var(0), target),
                    ),
                ),
            )
            define(env, lv(name, m), ty, body)


def _install_equiv_id(env) -> None:
    for m in LEVELS:
        idf = Lam(Var(0), Var(0))
        reflf = Lam(Var(0), apply_spine(_c("eq_refl", m), Var(1), Var(0)))
        adjf = Lam(
            Var(0),
            apply_spine(
                _c("eq_refl", m),
                apply_spine(_c("eq", m), Var(1), Var(0), Var(0)),
                apply_spine(_c("eq_refl", m), Var(1), Var(0)),
            ),
        )
        define(
            env,
            lv("equiv_id", m),
            Pi(Sort(m), _equiv_app(m, Var(0), Var(0))),
            Lam(Sort(m), mk_equiv(m, Var(0), Var(0), idf, idf, reflf, reflf, adjf)),
        )


# ---------------------------------------------------------------------------
# Postulates.


def funext_ty(i: int, j: int) -> Term:
    m = max(i, j)
    fam = Pi(Var(0), Sort(j))
    fdom = Pi(Var(1), App(Var(1), Var(0)))
    gdom = Pi(Var(2), App(Var(2), Var(0)))
    hdom = Pi(
        Var(3),
        apply_spine(
            _c("eq", j),
            App(Var(3), Var(0)),
            App(Var(2), Var(0)),
            App(Var(1), Var(0)),
        ),
    )
    concl = apply_spine(
        _c("eq", m), Pi(Var(4), App(Var(4), Var(0))), Var(2), Var(1)
    )
    return Pi(Sort(i), Pi(fam, Pi(fdom, Pi(gdom, Pi(hdom, concl)))))


def univalence_ty(i: int) -> Term:
    return Pi(
        Sort(i),
        Pi(
            Sort(i),
            Pi(
                _equiv_app(i, Var(1), Var(0)),
                apply_spine(_c("eq", i + 1), Sort(i), Var(2), Var(1)),
            ),
        ),
    )


def _install_postulates(env) -> None:
    for i, j in PI_LEVELS:
        axiom(env, lv("funext", i, j), funext_ty(i, j))
    for i in LEVELS:
        axiom(env, lv("univalence", i), univalence_ty(i))


# ---------------------------------------------------------------------------
# The bundle former and its accessors.


def _install_ur_bundle(env) -> None:
    for m in LEVELS:
        define(
            env,
            lv("ur_type", m),
            Pi(Sort(m), Pi(Sort(m), Sort(m + 1))),
            Lam(Sort(m), Lam(Sort(m), ur_type_at(m, Var(1), Var(0)))),
        )
        urty = _urty_app(m, Var(1), Var(0))
        relspace, eqty, fam_rel = bundle_parts(m, Var(2), Var(1))
        relproj = apply_spine(_c("proj1_sig", m + 1, m), relspace, fam_rel, Var(0))
        rest = apply_spine(_c("proj2_sig", m + 1, m), relspace, fam_rel, Var(0))
        fam_e_here = Lam(
            eqty, coh_ty(m, Var(3), Var(2), shift(relproj, 1), Var(0))
        )
        define(
            env,
            lv("ur_rel", m),
            Pi(Sort(m), Pi(Sort(m), Pi(urty, Pi(Var(2), Pi(Var(2), Sort(m)))))),
            Lam(Sort(m), Lam(Sort(m), Lam(urty, relproj))),
        )
        define(
            env,
            lv("ur_equiv", m),
            Pi(Sort(m), Pi(Sort(m), Pi(urty, _equiv_app(m, Var(2), Var(1))))),
            Lam(
                Sort(m),
                Lam(
                    Sort(m),
                    Lam(
                        urty,
                        apply_spine(
                            _c("proj1_sig", m, m), eqty, fam_e_here, rest
                        ),
                    ),
                ),
            ),
        )
        relpart = apply_spine(_c("ur_rel", m), Var(2), Var(1), Var(0))
        eqvpart = apply_spine(_c("ur_equiv", m), Var(2), Var(1), Var(0))
        define(
            env,
            lv("ur_coh", m),
            Pi(
                Sort(m),
                Pi(Sort(m), Pi(urty, coh_ty(m, Var(2), Var(1), relpart, eqvpart))),
            ),
            Lam(
                Sort(m),
                Lam(
                    Sort(m),
                    Lam(
                        urty,
                        apply_spine(
                            _c("proj2_sig", m, m), eqty, fam_e_here, rest
                        ),
                    ),
                ),
            ),
        )


# ---------------------------------------------------------------------------
# Inverse equivalences and inverse bundles.


def _install_sym(env) -> None:
    for m in LEVELS:
        A, B, e = Var(2), Var(1), Var(0)
        f = apply_spine(_c("e_fun", m), A, B, e)
        g = apply_spine(_c("e_inv", m), A, B, e)
        s = apply_spine(_c("e_sect", m), A, B, e)
        r = apply_spine(_c("e_retr", m), A, B, e)
        adj_ty = Pi(
            Sort(m),
            Pi(
                Sort(m),
                Pi(_equiv_app(m, Var(1), Var(0)), _comp_ty(m, 4, B, A, [g, f, r, s])),
            ),
        )
        trusted(env, lv("equiv_sym_adj", m), adj_ty)
        define(
            env,
            lv("equiv_sym", m),
            Pi(
                Sort(m),
                Pi(
                    Sort(m),
                    Pi(_equiv_app(m, Var(1), Var(0)), _equiv_app(m, Var(1), Var(2))),
                ),
            ),
            Lam(
                Sort(m),
                Lam(
                    Sort(m),
                    Lam(
                        _equiv_app(m, Var(1), Var(0)),
                        mk_equiv(
                            m,
                            B,
                            A,
                            g,
                            f,
                            r,
                            s,
                            apply_spine(_c("equiv_sym_adj", m), A, B, e),
                        ),
                    ),
                ),
            ),
        )

        urty = _urty_app(m, Var(1), Var(0))
        A, B, w = Var(2), Var(1), Var(0)
        flip = Lam(
            B,
            Lam(
                shift(A, 1),
                ur_rel_at(m, shift(A, 2), shift(B, 2), shift(w, 2), Var(0), Var(1)),
            ),
        )
        eqv = apply_spine(
            _c("equiv_sym", m), A, B, apply_spine(_c("ur_equiv", m), A, B, w)
        )
        trusted(
            env,
            lv("ur_sym_coh", m),
            Pi(Sort(m), Pi(Sort(m), Pi(urty, coh_ty(m, B, A, flip, eqv)))),
        )
        define(
            env,
            lv("ur_sym", m),
            Pi(Sort(m), Pi(Sort(m), Pi(urty, _urty_app(m, Var(1), Var(2))))),
            Lam(
                Sort(m),
                Lam(
                    Sort(m),
                    Lam(
                        urty,
                        mk_ur_value(
                            m,
                            B,
                            A,
                            flip,
                            eqv,
                            apply_spine(_c("ur_sym_coh", m), A, B, w),
                        ),
                    ),
                ),
            ),
        )


# ---------------------------------------------------------------------------
# The universe bundle.


def _install_universe(env) -> None:
    for i in (0, 1):
        inv_b = apply_spine(
            _c("e_inv", i + 1),
            Sort(i),
            Sort(i),
            App(_c("equiv_id", i + 1), Sort(i)),
            Var(0),
        )
        stmt = Pi(
            Sort(i),
            Pi(
                Sort(i),
                _equiv_app(
                    i + 1,
                    _urty_app(i, Var(1), Var(0)),
                    apply_spine(_c("eq", i + 1), Sort(i), Var(1), inv_b),
                ),
            ),
        )
        trusted(
            env,
            lv("univ_type_core", i),
            Pi(univalence_ty(i), shift(stmt, 1)),
        )
        define(
            env,
            lv("univ_type", i),
            stmt,
            App(_c("univ_type_core", i), _c("univalence", i)),
        )
        define(
            env,
            lv("fp_type", i),
            _urty_app(i + 1, Sort(i), Sort(i)),
            mk_ur_value(
                i + 1,
                Sort(i),
                Sort(i),
                _c("ur_type", i),
                App(_c("equiv_id", i + 1), Sort(i)),
                _c("univ_type", i),
            ),
        )


# ---------------------------------------------------------------------------
# The dependent-product equivalence.
#
# The forward and backward maps are ordinary lambda terms built from the
# argument bundles, so transported functions compute.  The section and
# retraction apply function extensionality to trusted pointwise facts.


def _ur_equiv_of(m: int, a: Term, b: Term, w: Term) -> Term:
    return apply_spine(_c("ur_equiv", m), a, b, w)


def _fwd_of(m: int, a: Term, b: Term, w: Term) -> Term:
    return apply_spine(_c("e_fun", m), a, b, _ur_equiv_of(m, a, b, w))


def _inv_of(m: int, a: Term, b: Term, w: Term) -> Term:
    return apply_spine(_c("e_inv", m), a, b, _ur_equiv_of(m, a, b, w))


def _wit_left(i: int, A: Term, Ap: Term, wA: Term, bpt: Term) -> Term:
    """A proof that inv(b') is related to b', from the coherence field."""
    ia = App(_inv_of(i, A, Ap, wA), bpt)
    rel = apply_spine(_c("ur_rel", i), A, Ap, wA, ia, bpt)
    eqn = apply_spine(_c("eq", i), A, ia, ia)
    coh = apply_spine(_c("ur_coh", i), A, Ap, wA, ia, bpt)
    return apply_spine(
        _c("e_inv", i), rel, eqn, coh, apply_spine(_c("eq_refl", i), A, ia)
    )


def _wit_right(i: int, A: Term, Ap: Term, wA: Term, apt: Term) -> Term:
    """A proof that a is related to fwd(a), from coherence and the section."""
    fa = App(_fwd_of(i, A, Ap, wA), apt)
    ia = App(_inv_of(i, A, Ap, wA), fa)
    rel = apply_spine(_c("ur_rel", i), A, Ap, wA, apt, fa)
    eqn = apply_spine(_c("eq", i), A, apt, ia)
    coh = apply_spine(_c("ur_coh", i), A, Ap, wA, apt, fa)
    sect = App(
        apply_spine(_c("e_sect", i), A, Ap, _ur_equiv_of(i, A, Ap, wA)), apt
    )
    flip = apply_spine(_c("eq_sym", i), A, ia, apt, sect)
    return apply_spine(_c("e_inv", i), rel, eqn, coh, flip)


def _fwd_fun(i: int, j: int, refs: tuple[Term, ...]) -> Term:
    A, Ap, wA, B, Bp, wB = refs
    piAB = Pi(A, App(shift(B, 1), Var(0)))
    A2, Ap2, wA2, B2, Bp2, wB2 = (shift(t, 2) for t in refs)
    ia = App(_inv_of(i, A2, Ap2, wA2), Var(0))
    wbi = apply_spine(wB2, ia, Var(0), _wit_left(i, A2, Ap2, wA2, Var(0)))
    Ba, Bpb = App(B2, ia), App(Bp2, Var(0))
    fb = apply_spine(_c("e_fun", j), Ba, Bpb, _ur_equiv_of(j, Ba, Bpb, wbi))
    return Lam(piAB, Lam(shift(Ap, 1), App(fb, App(Var(1), ia))))


def _inv_fun(i: int, j: int, refs: tuple[Term, ...]) -> Term:
    A, Ap, wA, B, Bp, wB = refs
    piApBp = Pi(Ap, App(shift(Bp, 1), Var(0)))
    A2, Ap2, wA2, B2, Bp2, wB2 = (shift(t, 2) for t in refs)
    fa = App(_fwd_of(i, A2, Ap2, wA2), Var(0))
    wbi = apply_spine(wB2, Var(0), fa, _wit_right(i, A2, Ap2, wA2, Var(0)))
    Ba, Bpf = App(B2, Var(0)), App(Bp2, fa)
    gb = apply_spine(_c("e_inv", j), Ba, Bpf, _ur_equiv_of(j, Ba, Bpf, wbi))
    return Lam(piApBp, Lam(shift(A, 1), App(gb, App(Var(1), fa))))


def _sect_fun(i: int, j: int, refs: tuple[Term, ...]) -> Term:
    A, Ap, wA, B, Bp, wB = refs
    piAB = Pi(A, App(shift(B, 1), Var(0)))
    refs1 = tuple(shift(t, 1) for t in refs)
    refs2 = tuple(shift(t, 2) for t in refs)
    rt = App(_inv_fun(i, j, refs1), App(_fwd_fun(i, j, refs1), Var(0)))
    pt = Lam(
        shift(A, 1),
        apply_spine(_c("equiv_pi_sect_pt", i, j), *refs2, Var(1), Var(0)),
    )
    return Lam(
        piAB,
        apply_spine(
            _c("funext", i, j), shift(A, 1), shift(B, 1), rt, Var(0), pt
        ),
    )


def _retr_fun(i: int, j: int, refs: tuple[Term, ...]) -> Term:
    A, Ap, wA, B, Bp, wB = refs
    piApBp = Pi(Ap, App(shift(Bp, 1), Var(0)))
    refs1 = tuple(shift(t, 1) for t in refs)
    refs2 = tuple(shift(t, 2) for t in refs)
    rt = App(_fwd_fun(i, j, refs1), App(_inv_fun(i, j, refs1), Var(0)))
    pt = Lam(
        shift(Ap, 1),
        apply_spine(_c("equiv_pi_retr_pt", i, j), *refs2, Var(1), Var(0)),
    )
    return Lam(
        piApBp,
        apply_spine(
            _c("funext", i, j), shift(Ap, 1), shift(Bp, 1), rt, Var(0), pt
        ),
    )


def _pi_frame(i: int, j: int, inner: Term, binder=Pi) -> Term:
    """Bind A, A', wA, B, B', wB around inner, with Pi or Lam."""
    wbty = Pi(
        Var(4),
        Pi(
            Var(4),
            Pi(
                apply_spine(
                    _c("ur_rel", i), Var(6), Var(5), Var(4), Var(1), Var(0)
                ),
                _urty_app(j, App(Var(4), Var(2)), App(Var(3), Var(1))),
            ),
        ),
    )
    return binder(
        Sort(i),
        binder(
            Sort(i),
            binder(
                _urty_app(i, Var(1), Var(0)),
                binder(
                    Pi(Var(2), Sort(j)),
                    binder(Pi(Var(2), Sort(j)), binder(wbty, inner)),
                ),
            ),
        ),
    )


_PI_REFS = (Var(5), Var(4), Var(3), Var(2), Var(1), Var(0))


def _install_pi(env) -> None:
    for i, j in PI_LEVELS:
        m = max(i, j)
        refs = _PI_REFS
        refs2 = tuple(shift(t, 2) for t in refs)
        piAB = Pi(Var(5), App(Var(3), Var(0)))
        piApBp = Pi(Var(4), App(Var(2), Var(0)))

        lhs_s = App(
            App(_inv_fun(i, j, refs2), App(_fwd_fun(i, j, refs2), Var(1))),
            Var(0),
        )
        sect_pt_ty = _pi_frame(
            i,
            j,
            Pi(
                piAB,
                Pi(
                    Var(6),
                    apply_spine(
                        _c("eq", j), App(Var(4), Var(0)), lhs_s, App(Var(1), Var(0))
                    ),
                ),
            ),
        )
        trusted(env, lv("equiv_pi_sect_pt", i, j), sect_pt_ty)

        lhs_r = App(
            App(_fwd_fun(i, j, refs2), App(_inv_fun(i, j, refs2), Var(1))),
            Var(0),
        )
        retr_pt_ty = _pi_frame(
            i,
            j,
            Pi(
                piApBp,
                Pi(
                    Var(5),
                    apply_spine(
                        _c("eq", j), App(Var(3), Var(0)), lhs_r, App(Var(1), Var(0))
                    ),
                ),
            ),
        )
        trusted(env, lv("equiv_pi_retr_pt", i, j), retr_pt_ty)

        fwd = _fwd_fun(i, j, refs)
        inv = _inv_fun(i, j, refs)
        sect = _sect_fun(i, j, refs)
        retr = _retr_fun(i, j, refs)
        adj_ty = _pi_frame(
            i, j, _comp_ty(m, 4, piAB, piApBp, [fwd, inv, sect, retr])
        )
        trusted(env, lv("equiv_pi_adj", i, j), adj_ty)

        define(
            env,
            lv("equiv_pi", i, j),
            _pi_frame(i, j, _equiv_app(m, piAB, piApBp)),
            _pi_frame(
                i,
                j,
                mk_equiv(
                    m,
                    piAB,
                    piApBp,
                    fwd,
                    inv,
                    sect,
                    retr,
                    apply_spine(_c("equiv_pi_adj", i, j), *refs),
                ),
                binder=Lam,
            ),
        )

        hk = refs2
        rel = Pi(
            hk[0],
            Pi(
                shift(hk[1], 1),
                Pi(
                    apply_spine(
                        _c("ur_rel", i),
                        shift(hk[0], 2),
                        shift(hk[1], 2),
                        shift(hk[2], 2),
                        Var(1),
                        Var(0),
                    ),
                    apply_spine(
                        _c("ur_rel", j),
                        App(shift(hk[3], 3), Var(2)),
                        App(shift(hk[4], 3), Var(1)),
                        apply_spine(shift(hk[5], 3), Var(2), Var(1), Var(0)),
                        App(Var(4), Var(2)),
                        App(Var(3), Var(1)),
                    ),
                ),
            ),
        )
        eqpart = apply_spine(
            _c("eq", m),
            shift(piAB, 2),
            Var(1),
            App(_inv_fun(i, j, hk), Var(0)),
        )
        univ_pi_stmt = _pi_frame(
            i, j, Pi(piAB, Pi(shift(piApBp, 1), _equiv_app(m, rel, eqpart)))
        )
        trusted(
            env,
            lv("univ_pi_core", i, j),
            Pi(funext_ty(i, j), shift(univ_pi_stmt, 1)),
        )
        define(
            env,
            lv("univ_pi", i, j),
            univ_pi_stmt,
            App(_c("univ_pi_core", i, j), _c("funext", i, j)),
        )


# ---------------------------------------------------------------------------
# Diagonal bundles for the ground types.


def diag_ur(m: int, ty: Term) -> Term:
    """The bundle relating a type to itself by equality, with identity maps."""
    t1, t2 = shift(ty, 1), shift(ty, 2)
    rel = Lam(ty, Lam(t1, apply_spine(_c("eq", m), t2, Var(1), Var(0))))
    coh = Lam(
        ty,
        Lam(
            t1,
            App(
                _c("equiv_id", m),
                apply_spine(_c("eq", m), t2, Var(1), Var(0)),
            ),
        ),
    )
    return mk_ur_value(m, ty, ty, rel, App(_c("equiv_id", m), ty), coh)


def _install_ground(env) -> None:
    for name in GROUND_TYPES:
        define(
            env,
            "fp_" + name,
            _urty_app(0, Const(name), Const(name)),
            diag_ur(0, Const(name)),
        )


# ---------------------------------------------------------------------------
# Bundles for dependent pairs.


def _srel_at(a: int, b: int, refs: tuple[Term, ...]) -> Term:
    """The pair relation at current-frame refs (A, A', wA, P, P', wP, s, s')."""
    A, Ap, wA, P, Pp, wP, s, sp = refs
    p1s = apply_spine(_c("proj1_sig", a, b), A, P, s)
    p1sp = apply_spine(_c("proj1_sig", a, b), Ap, Pp, sp)
    p2s = apply_spine(_c("proj2_sig", a, b), A, P, s)
    p2sp = apply_spine(_c("proj2_sig", a, b), Ap, Pp, sp)
    relcomp = apply_spine(_c("ur_rel", a), A, Ap, wA, p1s, p1sp)
    fam = Lam(
        relcomp,
        apply_spine(
            _c("ur_rel", b),
            App(shift(P, 1), shift(p1s, 1)),
            App(shift(Pp, 1), shift(p1sp, 1)),
            apply_spine(shift(wP, 1), shift(p1s, 1), shift(p1sp, 1), Var(0)),
            shift(p2s, 1),
            shift(p2sp, 1),
        ),
    )
    return apply_spine(_c("sigT", a, b), relcomp, fam)


def _install_sigma(env) -> None:
    for a, b in PAIR_LEVELS:
        m = max(a, b)
        refs = _PI_REFS
        ST = _sig_app(a, b, Var(5), Var(2))
        STp = _sig_app(a, b, Var(4), Var(1))
        trusted(
            env,
            lv("equiv_sigma", a, b),
            _pi_frame(a, b, _equiv_app(m, ST, STp)),
        )
        hk = tuple(shift(t, 2) for t in refs)
        srel = _srel_at(a, b, hk + (Var(1), Var(0)))
        eqpart = apply_spine(
            _c("eq", m),
            shift(ST, 2),
            Var(1),
            apply_spine(
                _c("e_inv", m),
                shift(ST, 2),
                shift(STp, 2),
                apply_spine(_c("equiv_sigma", a, b), *hk),
                Var(0),
            ),
        )
        trusted(
            env,
            lv("univ_sigma", a, b),
            _pi_frame(a, b, Pi(ST, Pi(shift(STp, 1), _equiv_app(m, srel, eqpart)))),
        )
        srel_lam = Lam(
            ST,
            Lam(
                shift(STp, 1),
                _srel_at(a, b, hk + (Var(1), Var(0))),
            ),
        )
        define(
            env,
            lv("fp_sigma", a, b),
            _pi_frame(a, b, _urty_app(m, ST, STp)),
            _pi_frame(
                a,
                b,
                mk_ur_value(
                    m,
                    ST,
                    STp,
                    srel_lam,
                    apply_spine(_c("equiv_sigma", a, b), *refs),
                    apply_spine(_c("univ_sigma", a, b), *refs),
                ),
                binder=Lam,
            ),
        )


# ---------------------------------------------------------------------------
# Bundles for equality types.


def _eq_frame(i: int, inner: Term, binder=Pi) -> Term:
    """Bind A, A', wA, x, x', wx, y, y', wy around inner."""
    relxx = apply_spine(_c("ur_rel", i), Var(4), Var(3), Var(2), Var(1), Var(0))
    relyy = apply_spine(_c("ur_rel", i), Var(7), Var(6), Var(5), Var(1), Var(0))
    return binder(
        Sort(i),
        binder(
            Sort(i),
            binder(
                _urty_app(i, Var(1), Var(0)),
                binder(
                    Var(2),
                    binder(
                        Var(2),
                        binder(
                            relxx,
                            binder(Var(5), binder(Var(5), binder(relyy, inner))),
                        ),
                    ),
                ),
            ),
        ),
    )


_EQ_REFS = tuple(Var(8 - k) for k in range(9))


def _install_eq(env) -> None:
    for i in (0, 1):
        EQ = apply_spine(_c("eq", i), Var(8), Var(5), Var(2))
        EQp = apply_spine(_c("eq", i), Var(7), Var(4), Var(1))
        trusted(
            env,
            lv("UR_eq", i),
            _eq_frame(i, Pi(EQ, Pi(shift(EQp, 1), Sort(i)))),
        )
        trusted(env, lv("equiv_eq", i), _eq_frame(i, _equiv_app(i, EQ, EQp)))
        hk = tuple(shift(t, 2) for t in _EQ_REFS)
        urapp = apply_spine(_c("UR_eq", i), *hk, Var(1), Var(0))
        eqpart = apply_spine(
            _c("eq", i),
            shift(EQ, 2),
            Var(1),
            apply_spine(
                _c("e_inv", i),
                shift(EQ, 2),
                shift(EQp, 2),
                apply_spine(_c("equiv_eq", i), *hk),
                Var(0),
            ),
        )
        trusted(
            env,
            lv("univ_eq", i),
            _eq_frame(i, Pi(EQ, Pi(shift(EQp, 1), _equiv_app(i, urapp, eqpart)))),
        )
        define(
            env,
            lv("fp_eq", i),
            _eq_frame(i, _urty_app(i, EQ, EQp)),
            _eq_frame(
                i,
                mk_ur_value(
                    i,
                    EQ,
                    EQp,
                    apply_spine(_c("UR_eq", i), *_EQ_REFS),
                    apply_spine(_c("equiv_eq", i), *_EQ_REFS),
                    apply_spine(_c("univ_eq", i), *_EQ_REFS),
                ),
                binder=Lam,
            ),
        )


# ---------------------------------------------------------------------------
# Bundles for lists.


def _install_list(env) -> None:
    for i in (0, 1):
        li = lambda t: App(_c("list", i), t)  # noqa: E731
        relty = Pi(Var(1), Pi(Var(1), Sort(i)))
        ur_ty = Pi(
            Sort(i),
            Pi(
                Sort(i),
                Pi(relty, Pi(li(Var(2)), Pi(li(Var(2)), Sort(i)))),
            ),
        )
        motive = Lam(li(Var(4)), Pi(li(Var(4)), Sort(i)))
        inner_nil = Lam(
            li(Var(3)),
            apply_spine(
                _c("list_rect", i, i + 1),
                Var(4),
                Lam(li(Var(4)), Sort(i)),
                _c("trueT", i),
                Lam(Var(4), Lam(li(Var(5)), Lam(Sort(i), _c("falseT", i)))),
                Var(0),
            ),
        )
        pair_payload = apply_spine(
            _c("sigT", i, i),
            apply_spine(Var(9), Var(6), Var(2)),
            Lam(apply_spine(Var(9), Var(6), Var(2)), App(Var(5), Var(2))),
        )
        inner_cons = Lam(
            Var(7),
            Lam(li(Var(8)), Lam(Sort(i), pair_payload)),
        )
        outer_cons = Lam(
            Var(4),
            Lam(
                li(Var(5)),
                Lam(
                    Pi(li(Var(5)), Sort(i)),
                    Lam(
                        li(Var(6)),
                        apply_spine(
                            _c("list_rect", i, i + 1),
                            Var(7),
                            Lam(li(Var(7)), Sort(i)),
                            _c("falseT", i),
                            inner_cons,
                            Var(0),
                        ),
                    ),
                ),
            ),
        )
        ur_body = Lam(
            Sort(i),
            Lam(
                Sort(i),
                Lam(
                    relty,
                    Lam(
                        li(Var(2)),
                        Lam(
                            li(Var(2)),
                            App(
                                apply_spine(
                                    _c("list_rect", i, i + 1),
                                    Var(4),
                                    motive,
                                    inner_nil,
                                    outer_cons,
                                    Var(1),
                                ),
                                Var(0),
                            ),
                        ),
                    ),
                ),
            ),
        )
        define(env, lv("UR_list", i), ur_ty, ur_body)

        urty = _urty_app(i, Var(1), Var(0))
        trusted(
            env,
            lv("equiv_list", i),
            Pi(
                Sort(i),
                Pi(Sort(i), Pi(urty, _equiv_app(i, li(Var(2)), li(Var(1))))),
            ),
        )
        relapp = apply_spine(
            _c("UR_list", i),
            Var(4),
            Var(3),
            apply_spine(_c("ur_rel", i), Var(4), Var(3), Var(2)),
            Var(1),
            Var(0),
        )
        eqpart = apply_spine(
            _c("eq", i),
            li(Var(4)),
            Var(1),
            apply_spine(
                _c("e_inv", i),
                li(Var(4)),
                li(Var(3)),
                apply_spine(_c("equiv_list", i), Var(4), Var(3), Var(2)),
                Var(0),
            ),
        )
        trusted(
            env,
            lv("univ_list", i),
            Pi(
                Sort(i),
                Pi(
                    Sort(i),
                    Pi(
                        urty,
                        Pi(
                            li(Var(2)),
                            Pi(li(Var(2)), _equiv_app(i, relapp, eqpart)),
                        ),
                    ),
                ),
            ),
        )
        define(
            env,
            lv("fp_list", i),
            Pi(
                Sort(i),
                Pi(Sort(i), Pi(urty, _urty_app(i, li(Var(2)), li(Var(1))))),
            ),
            Lam(
                Sort(i),
                Lam(
                    Sort(i),
                    Lam(
                        urty,
                        mk_ur_value(
                            i,
                            li(Var(2)),
                            li(Var(1)),
                            apply_spine(
                                _c("UR_list", i),
                                Var(2),
                                Var(1),
                                apply_spine(_c("ur_rel", i), Var(2), Var(1), Var(0)),
                            ),
                            apply_spine(_c("equiv_list", i), Var(2), Var(1), Var(0)),
                            apply_spine(_c("univ_list", i), Var(2), Var(1), Var(0)),
                        ),
                    ),
                ),
            ),
        )


def install_equiv(env) -> None:
    """Install the full equivalence layer into env, in dependency order."""
    _install_projections(env)
    _install_equiv_record(env)
    _install_equiv_id(env)
    _install_postulates(env)
    _install_ur_bundle(env)
    _install_sym(env)
    _install_universe(env)
    _install_pi(env)
    _install_ground(env)
    _install_sigma(env)
    _install_eq(env)
    _install_list(env)
