"""Call-by-name reduction with step accounting.

whnf drives an iterative spine machine: beta for lambdas, iota via a
dispatch table keyed by inductive (one row per inductive), delta only for
entries flagged reducible, and eager folding of the 16-bit primitives.

Delta is additionally guarded by a strictness annotation computed at
prelude load: a defined constant whose body immediately eliminates its
i-th argument only unfolds once that argument evaluates to a constructor
(or machine literal).  Stuck applications therefore keep their folded
name in normal forms instead of decaying into raw eliminator trees.

Step counts are deterministic: every beta, iota, delta, and primitive
fold adds one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .env import ORIGIN_AXIOM, GlobalEnv
from .errors import BudgetExceeded
from .terms import App, Const, Int16, Lam, Pi, Term, apply_spine, iter_consts, subst, unfold_spine

DEFAULT_BUDGET = 10**7


class StepCounter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int = DEFAULT_BUDGET) -> None:
        self.steps = 0
        self.budget = budget

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceeded(f"step budget {self.budget} exhausted")


@dataclass(frozen=True)
class NormResult:
    term: Term
    steps: int
    budget_hit: bool


@dataclass(frozen=True)
class AxiomReport:
    """Axiom occurrences in a normal form.

    effective is True when normalization finished and no axiom-origin
    constant survives; inconclusive marks a budget exhaustion, in which
    case term is the unreduced input.
    """

    term: Term
    stuck_axioms: tuple[str, ...]
    effective: bool
    inconclusive: bool
    steps: int


# --- iota dispatch: one row per built-in inductive ---------------------------


def _iota_nat(head, a, ctor):
    name, cargs = ctor
    if name == "O":
        return a[1]
    k = cargs[0]
    return App(App(a[2], k), apply_spine(head, a[0], a[1], a[2], k))


def _iota_bool(head, a, ctor):
    name, _ = ctor
    return a[1] if name == "true" else a[2]


def _iota_positive(head, a, ctor):
    name, cargs = ctor
    if name == "xH":
        return a[3]
    k = cargs[0]
    rec = apply_spine(head, a[0], a[1], a[2], a[3], k)
    branch = a[1] if name == "xI" else a[2]
    return App(App(branch, k), rec)


def _iota_N(head, a, ctor):
    name, cargs = ctor
    if name == "N0":
        return a[1]
    return App(a[2], cargs[0])


def _iota_list(head, a, ctor):
    name, cargs = ctor
    if name.split("__", 1)[0] == "nil":
        return a[2]
    _, x, tail = cargs
    rec = apply_spine(head, a[0], a[1], a[2], a[3], tail)
    return apply_spine(a[3], x, tail, rec)


def _iota_sigT(head, a, ctor):
    _, cargs = ctor
    return App(App(a[3], cargs[2]), cargs[3])


def _iota_eq(head, a, ctor):
    return a[3]


_IOTA = {
    "nat": _iota_nat,
    "bool": _iota_bool,
    "positive": _iota_positive,
    "N": _iota_N,
    "list": _iota_list,
    "sigT": _iota_sigT,
    "eq": _iota_eq,
}


def _ctor_view(env: GlobalEnv, t: Term):
    """(ctor name, args) when t is a fully applied constructor, else None."""
    head, args = unfold_spine(t)
    if type(head) is Const and head.name[0] != "?":
        entry = env.resolve(head.name)
        if entry.ctor is not None and len(args) == entry.ctor.arity:
            return head.name, args
    return None


def _is_value_head(env: GlobalEnv, t: Term) -> bool:
    if type(t) is Int16:
        return True
    return _ctor_view(env, t) is not None


def _rebuild(head: Term, spine: list[Term]) -> Term:
    for i in range(len(spine) - 1, -1, -1):
        head = App(head, spine[i])
    return head


def _prim_fold(op: str, a: int, b: int) -> int:
    if op == "lsl":
        return 0 if b >= 16 else (a << b) & 0xFFFF
    if op == "add16":
        return (a + b) & 0xFFFF
    return (a * b) & 0xFFFF  # mul16


def _N_literal(v: int) -> Term:
    """Binary natural literal (N0 / Npos with xI, xO, xH digits)."""
    if v == 0:
        return Const("N0")
    digits = []
    while v > 1:
        digits.append(v & 1)
        v >>= 1
    t: Term = Const("xH")
    for d in reversed(digits):
        t = App(Const("xI" if d else "xO"), t)
    return App(Const("Npos"), t)


def _decode_N(env: GlobalEnv, t: Term, counter, full_delta: bool) -> Optional[int]:
    """Numeric value of a binary natural, driving whnf one digit at a time.

    None when any position sticks on a non-constructor.
    """
    t = whnf(env, t, counter, full_delta=full_delta)
    v = _ctor_view(env, t)
    if v is None:
        return None
    name, cargs = v
    if name == "N0":
        return 0
    if name != "Npos":
        return None
    t = cargs[0]
    bits: list[int] = []
    while True:
        t = whnf(env, t, counter, full_delta=full_delta)
        v = _ctor_view(env, t)
        if v is None:
            return None
        name, cargs = v
        if name == "xH":
            bits.append(1)
            break
        if name == "xI":
            bits.append(1)
        elif name == "xO":
            bits.append(0)
        else:
            return None
        t = cargs[0]
    n = 0
    for b in reversed(bits):
        n = (n << 1) | b
    return n


def _try_prim(env: GlobalEnv, op: str, args: list, counter, full_delta: bool):
    """Fold a primitive on evaluated arguments, or None when stuck."""
    if op == "int16_to_N":
        a = args[0]
        return _N_literal(a.value) if type(a) is Int16 else None
    if op == "int16_of_N":
        n = _decode_N(env, args[0], counter, full_delta)
        return None if n is None else Int16(n & 0xFFFF)
    a, b = args
    if type(a) is Int16 and type(b) is Int16:
        return Int16(_prim_fold(op, a.value, b.value))
    return None


def whnf(
    env: GlobalEnv,
    t: Term,
    counter: Optional[StepCounter] = None,
    block: Optional[list[str]] = None,
    full_delta: bool = False,
) -> Term:
    """Weak head normal form.  Raises BudgetExceeded past the step budget.

    `block` (internal) collects head constants of stuck eliminator
    scrutinees; the strictness analyzer uses it.  `full_delta` ignores
    the strictness guard, unfolding every reducible constant; conversion
    uses it so guarded names never block definitional equality.
    """
    if counter is None:
        counter = StepCounter()
    spine: list[Term] = []
    frames: list[tuple] = []
    subst_ = subst
    while True:
        ty = type(t)
        if ty is App:
            spine.append(t.arg)
            t = t.fn
            continue
        if ty is Lam and spine:
            counter.tick()
            t = subst_(t.body, spine.pop())
            continue
        if ty is Const and t.name[0] != "?":
            entry = env.resolve(t.name)
            if entry.prim is not None and len(spine) >= entry.prim[1]:
                n = entry.prim[1]
                pargs = [spine.pop() for _ in range(n)]
                frames.append(("prim", t, entry, pargs, 0, spine))
                spine = []
                t = pargs[0]
                continue
            if entry.elim is not None and len(spine) >= entry.elim.arity:
                n = entry.elim.arity
                eargs = [spine.pop() for _ in range(n)]
                frames.append(("elim", t, entry, eargs, spine))
                spine = []
                t = eargs[-1]
                continue
            if entry.body is not None and entry.reducible:
                sa = entry.strict_arg
                if full_delta or sa is None:
                    counter.tick()
                    t = entry.body
                    continue
                if len(spine) > sa:
                    ga = spine[-1 - sa]
                    frames.append(("guard", t, entry, sa, spine))
                    spine = []
                    t = ga
                    continue
        # focus is a value or neutral head: plug into pending frames
        value = _rebuild(t, spine) if spine else t
        resumed = False
        while frames and not resumed:
            frame = frames.pop()
            kind = frame[0]
            if kind == "guard":
                _, head, entry, sa, saved = frame
                saved[-1 - sa] = value
                if _is_value_head(env, value):
                    counter.tick()
                    t = entry.body
                    spine = saved
                    resumed = True
                else:
                    value = _rebuild(head, saved)
            elif kind == "elim":
                _, head, entry, eargs, saved = frame
                eargs[-1] = value
                ctor = _ctor_view(env, value)
                if ctor is not None:
                    counter.tick()
                    t = _IOTA[entry.elim.ind](head, eargs, ctor)
                    spine = saved
                    resumed = True
                else:
                    if block is not None:
                        bh, _ = unfold_spine(value)
                        if type(bh) is Const:
                            block.append(bh.name)
                    stuck = head
                    for a in eargs:
                        stuck = App(stuck, a)
                    value = _rebuild(stuck, saved)
            else:  # prim
                _, head, entry, pargs, idx, saved = frame
                pargs[idx] = value
                if idx + 1 < len(pargs):
                    frames.append(("prim", head, entry, pargs, idx + 1, saved))
                    t = pargs[idx + 1]
                    spine = []
                    resumed = True
                else:
                    folded = _try_prim(env, entry.prim[0], pargs, counter, full_delta)
                    if folded is not None:
                        counter.tick()
                        t = folded
                        spine = saved
                        resumed = True
                    else:
                        value = _rebuild(apply_spine(head, *pargs), saved)
        if not resumed:
            return value


def normalize(
    env: GlobalEnv, t: Term, budget: int = DEFAULT_BUDGET, full_delta: bool = False
) -> NormResult:
    """Full normal form by whnf plus recursive descent (iterative).

    On budget exhaustion returns the original term with budget_hit set.
    """
    counter = StepCounter(budget)
    out: list[Term] = []
    work: list[tuple] = [("norm", t)]
    try:
        while work:
            op = work.pop()
            tag = op[0]
            if tag == "norm":
                h = whnf(env, op[1], counter, full_delta=full_delta)
                th = type(h)
                if th is Lam:
                    work.append(("lam",))
                    work.append(("norm", h.body))
                    work.append(("norm", h.ty))
                elif th is Pi:
                    work.append(("pi",))
                    work.append(("norm", h.cod))
                    work.append(("norm", h.dom))
                elif th is App:
                    head, args = unfold_spine(h)
                    work.append(("app", len(args)))
                    for a in reversed(args):
                        work.append(("norm", a))
                    work.append(("norm", head))
                else:
                    out.append(h)
            elif tag == "lam":
                body = out.pop()
                ty2 = out.pop()
                out.append(Lam(ty2, body))
            elif tag == "pi":
                cod = out.pop()
                dom = out.pop()
                out.append(Pi(dom, cod))
            else:  # app spine
                n = op[1]
                args = out[-n:]
                del out[-n:]
                head = out.pop()
                out.append(apply_spine(head, *args))
    except BudgetExceeded:
        return NormResult(t, counter.steps, True)
    return NormResult(out[0], counter.steps, False)


def effectiveness(env: GlobalEnv, t: Term, budget: int = DEFAULT_BUDGET) -> AxiomReport:
    """Normalize and collect axiom-origin constants surviving in the result."""
    nr = normalize(env, t, budget)
    if nr.budget_hit:
        return AxiomReport(t, (), False, True, nr.steps)
    seen: list[str] = []
    for name in iter_consts(nr.term):
        if name[0] != "?" and name not in seen:
            if env.resolve(name).origin == ORIGIN_AXIOM:
                seen.append(name)
    seen.sort()
    return AxiomReport(nr.term, tuple(seen), not seen, False, nr.steps)


def analyze_strict_arg(env: GlobalEnv, body: Term, probe_budget: int = 2000) -> Optional[int]:
    """Which argument the body immediately eliminates, if any.

    Drives whnf on the body applied to opaque sentinels; when evaluation
    sticks on sentinel ?strictI as an eliminator scrutinee, returns I.
    """
    t = body
    arity = 0
    while type(t) is Lam:
        arity += 1
        t = t.body
    if arity == 0:
        return None
    probe = apply_spine(body, *[Const(f"?strict{i}") for i in range(arity)])
    blocked: list[str] = []
    try:
        whnf(env, probe, StepCounter(probe_budget), block=blocked)
    except BudgetExceeded:
        return None
    for name in blocked:
        if name.startswith("?strict"):
            return int(name[7:])
    return None
