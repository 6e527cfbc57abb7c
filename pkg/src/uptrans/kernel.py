"""Typechecker for the core calculus.

Explicit non-cumulative universes: Sort i : Sort i+1, Pi at the max of
the domain and codomain levels.  Conversion is incremental: weak-head
reduce both sides under a step budget, compare heads, recurse on the
pieces, with an alpha-equality fast path on every pending pair.
"""

from __future__ import annotations

from typing import Optional

from .env import FLAVOR_PARAM, GlobalContext, GlobalEnv, LocalCtx
from .errors import (
    CheckResult,
    ConversionFailure,
    IllFormedTelescope,
    MissingPrefix,
    NotAFunction,
    TypeMismatch,
    UnboundVariable,
    UnrelatedConstant,
    UptransError,
)
from .reduction import DEFAULT_BUDGET, StepCounter, whnf
from .terms import App, Const, Int16, Lam, Pi, Sort, Term, Var, alpha_eq, shift, subst


def infer(
    env: GlobalEnv,
    ctx: LocalCtx,
    t: Term,
    budget: int = DEFAULT_BUDGET,
    counter: Optional[StepCounter] = None,
) -> Term:
    """Type of t in ctx.  Raises kernel errors on failure."""
    if counter is None:
        counter = StepCounter(budget)
    return _infer(env, ctx, t, counter)


def _infer(env: GlobalEnv, ctx: LocalCtx, t: Term, counter: StepCounter) -> Term:
    ty = type(t)
    if ty is Sort:
        return Sort(t.level + 1)
    if ty is Var:
        if t.index >= len(ctx):
            raise UnboundVariable(f"de Bruijn index {t.index} in context of {len(ctx)}")
        return shift(ctx[len(ctx) - 1 - t.index], t.index + 1)
    if ty is Const:
        return env.resolve(t.name).ty
    if ty is Int16:
        return Const("int16")
    if ty is Lam:
        _sort_of(env, ctx, t.ty, counter)
        body_ty = _infer(env, ctx + (t.ty,), t.body, counter)
        return Pi(t.ty, body_ty)
    if ty is Pi:
        s1 = _sort_of(env, ctx, t.dom, counter)
        s2 = _sort_of(env, ctx + (t.dom,), t.cod, counter)
        return Sort(max(s1, s2))
    # App
    fn_ty = whnf(env, _infer(env, ctx, t.fn, counter), counter, full_delta=True)
    if type(fn_ty) is not Pi:
        raise NotAFunction(f"application head has non-Pi type {type(fn_ty).__name__}")
    arg_ty = _infer(env, ctx, t.arg, counter)
    if not _conv(env, arg_ty, fn_ty.dom, counter):
        raise TypeMismatch("argument type does not convert to the expected domain")
    return subst(fn_ty.cod, t.arg)


def _sort_of(env: GlobalEnv, ctx: LocalCtx, t: Term, counter: StepCounter) -> int:
    s = whnf(env, _infer(env, ctx, t, counter), counter, full_delta=True)
    if type(s) is not Sort:
        raise TypeMismatch("expected a sort")
    return s.level


def _spine(t: Term) -> tuple[Term, list[Term]]:
    args: list[Term] = []
    while type(t) is App:
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def _unfoldable(env: GlobalEnv, name: str) -> bool:
    if name[0] == "?":
        return False
    e = env.resolve(name)
    return (e.body is not None and e.reducible) or e.elim is not None or e.prim is not None


def _conv(env: GlobalEnv, a: Term, b: Term, counter: StepCounter) -> bool:
    """Definitional equality, compared incrementally.

    Each pending pair gets an alpha fast path.  When both sides are
    applications of the same defined, eliminator, or operator constant,
    the spines are compared componentwise first, with a checkpoint to
    fall back to unfolding if that optimistic attempt fails; matching
    spines this way avoids materializing large definition bodies.
    Failing those, both sides go to weak head normal form and are
    compared head-by-head, pushing subterm pairs onto the work stack.
    Without eta, weak-head-stuck terms are convertible exactly when
    their heads match and their pieces are convertible, so this never
    builds a full normal form.
    """
    # Work items are (left, right, forced); forced marks a pair retried
    # after a failed optimistic attempt, which must unfold this time.
    stack: list[tuple[Term, Term, bool]] = [(a, b, False)]
    # Checkpoints are (stack length, left, right): discard everything
    # the attempt pushed and retry the saved pair by unfolding.
    marks: list[tuple[int, Term, Term]] = []

    def fail() -> bool:
        """Unwind to the innermost live checkpoint; False when none."""
        if not marks:
            return False
        n, x, y = marks.pop()
        del stack[n:]
        stack.append((x, y, True))
        return True

    while stack:
        x, y, forced = stack.pop()
        while marks and marks[-1][0] > len(stack):
            marks.pop()  # that attempt's subtree compared clean
        if alpha_eq(x, y):
            continue
        if not forced:
            hx, sx = _spine(x)
            hy, sy = _spine(y)
            if (
                type(hx) is Const
                and type(hy) is Const
                and hx.name == hy.name
                and len(sx) == len(sy)
                and sx
                and _unfoldable(env, hx.name)
            ):
                marks.append((len(stack), x, y))
                stack.extend((p, q, False) for p, q in zip(sx, sy))
                continue
        x = whnf(env, x, counter, full_delta=True)
        y = whnf(env, y, counter, full_delta=True)
        hx, sx = _spine(x)
        hy, sy = _spine(y)
        tx, ty = type(hx), type(hy)
        if tx is not ty or len(sx) != len(sy):
            if fail():
                continue
            return False
        mismatch = False
        if tx is Sort:
            mismatch = hx.level != hy.level
        elif tx is Var:
            mismatch = hx.index != hy.index
        elif tx is Const:
            mismatch = hx.name != hy.name
        elif tx is Int16:
            mismatch = hx.value != hy.value
        elif tx is Pi:
            mismatch = bool(sx)
        elif tx is Lam:
            mismatch = bool(sx)
        else:
            mismatch = True
        if mismatch:
            if fail():
                continue
            return False
        stack.extend((p, q, False) for p, q in zip(sx, sy))
        if tx is Pi:
            stack.append((hx.dom, hy.dom, False))
            stack.append((hx.cod, hy.cod, False))
        elif tx is Lam:
            stack.append((hx.ty, hy.ty, False))
            stack.append((hx.body, hy.body, False))
    return True


def conv(env: GlobalEnv, a: Term, b: Term, budget: int = DEFAULT_BUDGET) -> bool:
    """Definitional equality under a step budget.

    Raises BudgetExceeded when reduction overruns the budget.
    """
    return _conv(env, a, b, StepCounter(budget))


def check(
    env: GlobalEnv,
    ctx: LocalCtx,
    t: Term,
    expected: Term,
    budget: int = DEFAULT_BUDGET,
) -> CheckResult:
    """Check t against expected; errors come back as a CheckResult."""
    counter = StepCounter(budget)
    try:
        actual = _infer(env, ctx, t, counter)
        if not _conv(env, actual, expected, counter):
            return CheckResult.failed(
                ConversionFailure("inferred type does not convert to the expected type")
            )
        return CheckResult.passed()
    except UptransError as err:
        return CheckResult.failed(err)


def wf_global_context(
    env: GlobalEnv, delta: GlobalContext, budget: int = DEFAULT_BUDGET
) -> CheckResult:
    """Each triple's witness checks against the translated relation over
    its prefix (param or univalent per the context flavor)."""
    from .translate import param_rel, uparam_rel

    for i, triple in enumerate(delta.triples):
        prefix = delta.prefix(i)
        try:
            left_ty = env.resolve(triple.left).ty
            env.resolve(triple.right)
            if delta.flavor == FLAVOR_PARAM:
                expected = param_rel(
                    env, prefix, left_ty, Const(triple.left), Const(triple.right)
                )
            else:
                expected = uparam_rel(
                    env, prefix, left_ty, Const(triple.left), Const(triple.right)
                )
        except UnrelatedConstant as err:
            return CheckResult.failed(
                MissingPrefix(f"triple {i} ({triple.left}): {err}")
            )
        except UptransError as err:
            return CheckResult.failed(
                IllFormedTelescope(f"triple {i} ({triple.left}): {err}")
            )
        res = check(env, (), triple.witness, expected, budget)
        if not res.ok:
            return CheckResult.failed(
                IllFormedTelescope(
                    f"triple {i} ({triple.left}): witness ill-typed: {res.error}"
                )
            )
    return CheckResult.passed()
