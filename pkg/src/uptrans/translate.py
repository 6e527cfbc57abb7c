"""Relational translations over the core calculus.

Two translations are implemented.  `param_translate` sends a term to a
proof that it is related to its renamed copy: types become binary
relations, functions become maps that preserve relatedness.  It is
purely syntax directed and needs no typing information.

`uparam_translate` is the strengthened form used for transport.  A type
translates to a bundle of three components: a relation between the two
sides, an equivalence between them, and a coherence stating that the
relation is pointwise equivalent to equality along the inverse map.
Universe levels of domains and codomains decide which instances of the
bundle machinery to use, so this translation carries the global
environment and a source typing context and infers sorts as it walks.

Both translations read constants from a relatedness telescope
(GlobalContext).  The strengthened one additionally falls back to the
environment's self-witness table, which relates each library constant
to itself; a constant with neither entry is reported as unrelated.

Frame discipline: a source variable expands to three consecutive
binders (left copy, right copy, relatedness), so source index i lands
on 3*i for the witness, 3*i+1 for the right copy, and 3*i+2 for the
left copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .env import (
    FLAVOR_PARAM,
    GlobalContext,
    GlobalEnv,
    LocalCtx,
)
from .errors import (
    CheckResult,
    LevelMismatch,
    TypeMismatch,
    UnrelatedConstant,
    UptransError,
)
from .kernel import check, infer
from .levels import lv
from .reduction import DEFAULT_BUDGET, StepCounter, whnf
from .terms import (
    App,
    Const,
    Int16,
    Lam,
    Pi,
    Sort,
    Term,
    Var,
    apply_spine,
    shift,
)
from .terms import subst as _subst

LEFT = 2
RIGHT = 1

# The equivalence bundle machinery is materialized for levels 0..2, and
# a sort Sort i translates to a bundle one level up, so sorts inside
# translated terms may mention Sort 0 and Sort 1 only.
_MACHINERY_CEILING = 2
_SORT_CEILING = 1


def embed(delta: GlobalContext, t: Term, side: int, cutoff: int = 0) -> Term:
    """Rename t from the source frame into the tripled frame.

    Side LEFT keeps constants; side RIGHT renames each constant with a
    telescope entry to its partner (others stand for themselves).  A
    variable below the cutoff is bound inside t and stays put; from the
    cutoff up it lands on its left or right copy.
    """
    ty = type(t)
    if ty is Var:
        k = t.index
        if k < cutoff:
            return t
        return Var(cutoff + 3 * (k - cutoff) + side)
    if ty is Const:
        if side == RIGHT:
            triple = delta.lookup(t.name)
            if triple is not None:
                return Const(triple.right)
        return t
    if ty is Sort or ty is Int16:
        return t
    if ty is Lam:
        return Lam(
            embed(delta, t.ty, side, cutoff),
            embed(delta, t.body, side, cutoff + 1),
        )
    if ty is Pi:
        return Pi(
            embed(delta, t.dom, side, cutoff),
            embed(delta, t.cod, side, cutoff + 1),
        )
    return App(embed(delta, t.fn, side, cutoff), embed(delta, t.arg, side, cutoff))


def prime_translate(delta: GlobalContext, t: Term) -> Term:
    """Rename every telescope-related constant to its partner.

    Variables, sorts, literals, and unrelated constants stay put; this
    is the right-hand projection of a translation without the frame
    tripling.
    """
    ty = type(t)
    if ty is Const:
        triple = delta.lookup(t.name)
        return Const(triple.right) if triple is not None else t
    if ty is Var or ty is Sort or ty is Int16:
        return t
    if ty is Lam:
        return Lam(prime_translate(delta, t.ty), prime_translate(delta, t.body))
    if ty is Pi:
        return Pi(prime_translate(delta, t.dom), prime_translate(delta, t.cod))
    return App(prime_translate(delta, t.fn), prime_translate(delta, t.arg))


def place_open(t: Term, target: int, binders: int) -> Term:
    """Re-seat a one-hole term under new binders.

    t lives one binder deep (its variable 0 is the hole); the result
    lives under `binders` new binders instead, with the hole pointing at
    variable `target` and every other free variable moved past the new
    binders.
    """
    return _subst(shift(t, binders, 1), Var(target), 0)


# ---------------------------------------------------------------------------
# Bundle construction shared by the translation and the library.


def equiv_ty(m: int, left: Term, right: Term) -> Term:
    """The type of equivalences between left and right at level m."""
    return apply_spine(Const(lv("Equiv", m)), left, right)


def coh_ty(m: int, left: Term, right: Term, rel: Term, eqv: Term) -> Term:
    """Pi (a : left) (b : right). Equiv (rel a b) (eq left a (inv b))
    with inv taken from the equivalence eqv.  Inputs are current-frame
    terms; the result inserts the two binders itself."""
    inv = apply_spine(
        Const(lv("e_inv", m)),
        shift(left, 2),
        shift(right, 2),
        shift(eqv, 2),
        Var(0),
    )
    body = apply_spine(
        Const(lv("Equiv", m)),
        apply_spine(shift(rel, 2), Var(1), Var(0)),
        apply_spine(Const(lv("eq", m)), shift(left, 2), Var(1), inv),
    )
    return Pi(left, Pi(shift(right, 1), body))


def ur_type_at(m: int, left: Term, right: Term) -> Term:
    """The bundle type over left and right, spelled as its sigma nest."""
    if m > _MACHINERY_CEILING:
        raise LevelMismatch(f"no relatedness bundle at level {m}")
    relspace, _, fam_rel = bundle_parts(m, left, right)
    return apply_spine(Const(lv("sigT", m + 1, m)), relspace, fam_rel)


def bundle_parts(m: int, left: Term, right: Term) -> tuple[Term, Term, Term]:
    """The sigma components of the bundle type over left and right:
    relation space, equivalence type, and the outer family.  Shared so
    that bundle construction and bundle projection agree syntactically."""
    relspace = Pi(left, Pi(shift(right, 1), Sort(m)))
    eqty = equiv_ty(m, left, right)
    fam_e = Lam(
        shift(eqty, 1),
        coh_ty(m, shift(left, 2), shift(right, 2), Var(1), Var(0)),
    )
    fam_rel = Lam(
        relspace,
        apply_spine(Const(lv("sigT", m, m)), shift(eqty, 1), fam_e),
    )
    return relspace, eqty, fam_rel


def mk_ur_value(
    m: int, left: Term, right: Term, rel: Term, equiv: Term, coh: Term
) -> Term:
    """Package relation, equivalence, and coherence as an inhabitant of
    the bundle type over left and right at level m."""
    if m > _MACHINERY_CEILING:
        raise LevelMismatch(f"no relatedness bundle at level {m}")
    relspace, eqty, fam_rel = bundle_parts(m, left, right)
    fam_e_here = Lam(
        eqty,
        coh_ty(m, shift(left, 1), shift(right, 1), shift(rel, 1), Var(0)),
    )
    payload = apply_spine(
        Const(lv("existT", m, m)), eqty, fam_e_here, equiv, coh
    )
    return apply_spine(
        Const(lv("existT", m + 1, m)), relspace, fam_rel, rel, payload
    )


def ur_rel_at(m: int, left: Term, right: Term, wit: Term, a: Term, b: Term) -> Term:
    """The relation component of a bundle witness, applied to a and b."""
    if m > _MACHINERY_CEILING:
        raise LevelMismatch(f"no relatedness bundle at level {m}")
    return apply_spine(Const(lv("ur_rel", m)), left, right, wit, a, b)


# ---------------------------------------------------------------------------
# Parametricity translation (syntax directed, level free).


def param_translate(delta: GlobalContext, t: Term) -> Term:
    """Relate t to its renamed copy.

    Types go to binary relations; a sort goes to the relation space
    constructor; a constant must carry a telescope witness.  Works on
    any term whose constants are all covered, with no typing input.
    """
    ty = type(t)
    if ty is Var:
        return Var(3 * t.index)
    if ty is Sort:
        i = t.level
        return Lam(Sort(i), Lam(Sort(i), Pi(Var(1), Pi(Var(1), Sort(i)))))
    if ty is Const:
        triple = delta.lookup(t.name)
        if triple is None:
            raise UnrelatedConstant(
                f"{t.name} has no entry in the relatedness telescope"
            )
        return triple.witness
    if ty is Int16:
        if delta.lookup("int16") is not None:
            raise UnrelatedConstant(
                "machine-word literal under a non-diagonal int16 relation"
            )
        return apply_spine(Const("eq_refl"), Const("int16"), t)
    if ty is Lam:
        la = embed(delta, t.ty, LEFT)
        ra = embed(delta, t.ty, RIGHT)
        wa = param_translate(delta, t.ty)
        rel = apply_spine(shift(wa, 2), Var(1), Var(0))
        return Lam(la, Lam(shift(ra, 1), Lam(rel, param_translate(delta, t.body))))
    if ty is App:
        return apply_spine(
            param_translate(delta, t.fn),
            embed(delta, t.arg, LEFT),
            embed(delta, t.arg, RIGHT),
            param_translate(delta, t.arg),
        )
    # Pi: relate two dependent products pointwise over related arguments.
    la = embed(delta, t.dom, LEFT)
    ra = embed(delta, t.dom, RIGHT)
    wa = param_translate(delta, t.dom)
    lt = Pi(la, embed(delta, t.cod, LEFT, 1))
    rt = Pi(ra, embed(delta, t.cod, RIGHT, 1))
    wb = param_translate(delta, t.cod)
    rel_dom = apply_spine(shift(wa, 4), Var(1), Var(0))
    body = apply_spine(
        shift(wb, 2, 3),
        App(Var(4), Var(2)),
        App(Var(3), Var(1)),
    )
    return Lam(
        lt,
        Lam(
            shift(rt, 1),
            Pi(shift(la, 2), Pi(shift(ra, 3), Pi(rel_dom, body))),
        ),
    )


# ---------------------------------------------------------------------------
# Univalent translation (level aware).


def _level_of(env: GlobalEnv, ctx: LocalCtx, a: Term, counter: StepCounter) -> int:
    s = whnf(env, infer(env, ctx, a, counter=counter), counter, full_delta=True)
    if type(s) is not Sort:
        raise TypeMismatch("translated binder type is not a type")
    return s.level


def _note(trace: Optional[list], *event) -> None:
    if trace is not None:
        trace.append(event)


def _rel_inst(i: int, la: Term, ra: Term, wa: Term, depth: int) -> Term:
    """Relation binder type: the bundle relation of the domain applied
    to the two copies bound just below, seen from `depth` binders in."""
    return apply_spine(
        Const(lv("ur_rel", i)),
        shift(la, depth),
        shift(ra, depth),
        shift(wa, depth),
        Var(1),
        Var(0),
    )


def uparam_translate(
    env: GlobalEnv,
    delta: GlobalContext,
    t: Term,
    ctx: LocalCtx = (),
    budget: int = DEFAULT_BUDGET,
    trace: Optional[list] = None,
) -> Term:
    """Translate t to its relatedness witness under the telescope.

    For a type the result is a bundle (relation, equivalence,
    coherence); for a term it is a proof that the term is related to
    its renamed copy.  `ctx` is the source typing context of t; `trace`
    collects (rule, ...) events in preorder when provided.
    """
    counter = StepCounter(budget)
    return _uparam(env, delta, t, ctx, counter, trace)


def _uparam(
    env: GlobalEnv,
    delta: GlobalContext,
    t: Term,
    ctx: LocalCtx,
    counter: StepCounter,
    trace: Optional[list],
) -> Term:
    ty = type(t)
    if ty is Var:
        _note(trace, "var", t.index)
        return Var(3 * t.index)
    if ty is Sort:
        if t.level > _SORT_CEILING:
            raise LevelMismatch(
                f"Sort {t.level} inside a translated term exceeds the bundle tower"
            )
        _note(trace, "sort", t.level)
        return Const(lv("fp_type", t.level))
    if ty is Const:
        triple = delta.lookup(t.name)
        if triple is not None:
            _note(trace, "delta", t.name)
            return triple.witness
        wit = env.self_witness.get(t.name)
        if wit is None:
            raise UnrelatedConstant(
                f"{t.name}: no telescope entry and no self-witness"
            )
        _note(trace, "self", t.name)
        return wit
    if ty is Int16:
        if delta.lookup("int16") is not None:
            raise UnrelatedConstant(
                "machine-word literal under a non-diagonal int16 relation"
            )
        _note(trace, "lit", t.value)
        return apply_spine(Const("eq_refl"), Const("int16"), t)
    if ty is Lam:
        i = _level_of(env, ctx, t.ty, counter)
        if i > _MACHINERY_CEILING:
            raise LevelMismatch(f"binder domain at level {i} exceeds the bundle tower")
        _note(trace, "lam", i)
        la = embed(delta, t.ty, LEFT)
        ra = embed(delta, t.ty, RIGHT)
        wa = _uparam(env, delta, t.ty, ctx, counter, trace)
        body = _uparam(env, delta, t.body, ctx + (t.ty,), counter, trace)
        return Lam(la, Lam(shift(ra, 1), Lam(_rel_inst(i, la, ra, wa, 2), body)))
    if ty is App:
        _note(trace, "app")
        return apply_spine(
            _uparam(env, delta, t.fn, ctx, counter, trace),
            embed(delta, t.arg, LEFT),
            embed(delta, t.arg, RIGHT),
            _uparam(env, delta, t.arg, ctx, counter, trace),
        )
    # Pi
    i = _level_of(env, ctx, t.dom, counter)
    j = _level_of(env, ctx + (t.dom,), t.cod, counter)
    m = max(i, j)
    if m > _MACHINERY_CEILING:
        raise LevelMismatch(
            f"product at levels ({i}, {j}) exceeds the bundle tower"
        )
    _note(trace, "pi", i, j)
    la = embed(delta, t.dom, LEFT)
    ra = embed(delta, t.dom, RIGHT)
    wa = _uparam(env, delta, t.dom, ctx, counter, trace)
    lb1 = embed(delta, t.cod, LEFT, 1)
    rb1 = embed(delta, t.cod, RIGHT, 1)
    wb = _uparam(env, delta, t.cod, ctx + (t.dom,), counter, trace)
    lt = Pi(la, lb1)
    rt = Pi(ra, rb1)
    # Relation: pointwise relatedness of applications over related
    # arguments.  Binder frame: fn 4, fn' 3, a 2, a' 1, aR 0.
    rel_body = apply_spine(
        Const(lv("ur_rel", j)),
        place_open(lb1, 2, 5),
        place_open(rb1, 1, 5),
        shift(wb, 2, 3),
        App(Var(4), Var(2)),
        App(Var(3), Var(1)),
    )
    rel = Lam(
        lt,
        Lam(
            shift(rt, 1),
            Pi(
                shift(la, 2),
                Pi(shift(ra, 3), Pi(_rel_inst(i, la, ra, wa, 4), rel_body)),
            ),
        ),
    )
    wb_fun = Lam(la, Lam(shift(ra, 1), Lam(_rel_inst(i, la, ra, wa, 2), wb)))
    args = (la, ra, wa, Lam(la, lb1), Lam(ra, rb1), wb_fun)
    equiv = apply_spine(Const(lv("equiv_pi", i, j)), *args)
    coh = apply_spine(Const(lv("univ_pi", i, j)), *args)
    return mk_ur_value(m, lt, rt, rel, equiv, coh)


# ---------------------------------------------------------------------------
# Relation types and context translation.


def param_rel(
    env: GlobalEnv, delta: GlobalContext, a: Term, left: Term, right: Term
) -> Term:
    """The parametricity relation at type a, applied to left and right.
    The environment is accepted for interface symmetry and unused."""
    del env
    return apply_spine(param_translate(delta, a), left, right)


def uparam_rel(
    env: GlobalEnv,
    delta: GlobalContext,
    a: Term,
    left: Term,
    right: Term,
    ctx: LocalCtx = (),
    budget: int = DEFAULT_BUDGET,
) -> Term:
    """The bundle relation at type a, applied to left and right.

    a is a source-frame type; left and right must already live in the
    tripled frame (for closed terms the frames coincide).
    """
    counter = StepCounter(budget)
    i = _level_of(env, ctx, a, counter)
    if i > _MACHINERY_CEILING:
        raise LevelMismatch(f"type at level {i} exceeds the bundle tower")
    wa = _uparam(env, delta, a, ctx, counter, None)
    return ur_rel_at(
        i, embed(delta, a, LEFT), embed(delta, a, RIGHT), wa, left, right
    )


def translate_local_ctx(
    env: GlobalEnv,
    delta: GlobalContext,
    ctx: LocalCtx,
    budget: int = DEFAULT_BUDGET,
) -> LocalCtx:
    """Triple a source typing context: each entry becomes its left copy,
    right copy, and the relation between the two bound copies."""
    counter = StepCounter(budget)
    out: list[Term] = []
    for k, a in enumerate(ctx):
        prefix = ctx[:k]
        la = embed(delta, a, LEFT)
        ra = embed(delta, a, RIGHT)
        if delta.flavor == FLAVOR_PARAM:
            wa = param_translate(delta, a)
            rel = apply_spine(shift(wa, 2), Var(1), Var(0))
        else:
            i = _level_of(env, prefix, a, counter)
            if i > _MACHINERY_CEILING:
                raise LevelMismatch(
                    f"context entry at level {i} exceeds the bundle tower"
                )
            wa = _uparam(env, delta, a, prefix, counter, None)
            rel = _rel_inst(i, la, ra, wa, 2)
        out.extend((la, shift(ra, 1), rel))
    return tuple(out)


# ---------------------------------------------------------------------------
# Whole-term checking.


@dataclass(frozen=True)
class Translation:
    """A term, its two projections, and the checked witness."""

    source: Term
    source_ty: Term
    left: Term
    right: Term
    witness: Term
    rel_type: Term


@dataclass(frozen=True)
class AbstractionOutcome:
    """Result of translating a closed term and checking its witness."""

    ok: bool
    translation: Optional[Translation]
    error: Optional[UptransError] = None


def abstraction_check(
    env: GlobalEnv,
    delta: GlobalContext,
    t: Term,
    budget: int = DEFAULT_BUDGET,
) -> AbstractionOutcome:
    """Translate a closed term and typecheck the witness against the
    relation at its translated type."""
    try:
        a = infer(env, (), t, budget)
        left = embed(delta, t, LEFT)
        right = embed(delta, t, RIGHT)
        if delta.flavor == FLAVOR_PARAM:
            witness = param_translate(delta, t)
            rel_ty = apply_spine(param_translate(delta, a), left, right)
        else:
            witness = uparam_translate(env, delta, t, budget=budget)
            rel_ty = uparam_rel(env, delta, a, left, right, budget=budget)
        tr = Translation(t, a, left, right, witness, rel_ty)
    except UptransError as err:
        return AbstractionOutcome(False, None, err)
    res: CheckResult = check(env, (), witness, rel_ty, budget)
    if not res.ok:
        return AbstractionOutcome(False, tr, res.error)
    return AbstractionOutcome(True, tr, None)
