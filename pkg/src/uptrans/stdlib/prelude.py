"""Prelude assembly: install every constant, typecheck, freeze, share.

The shared environment is built once per process and reused by tests
and the command line; sessions extend a child copy so the prelude
itself stays immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..env import GlobalEnv
from ..errors import PreludeIllTyped, UptransError
from . import arith, core, decide, eqlib, equiv, selfwit


@dataclass(frozen=True)
class Prelude:
    """The loaded standard environment plus its registered contexts."""

    env: GlobalEnv
    contexts: dict = field(default_factory=dict)


def _assemble() -> GlobalEnv:
    env = GlobalEnv()
    core.install_core(env)
    eqlib.install_eqlib(env)
    arith.install_arith(env)
    decide.install_decide(env)
    equiv.install_equiv(env)
    selfwit.install_selfwit(env)
    return env


def _typecheck(env: GlobalEnv) -> None:
    from ..kernel import check, infer

    for name in env.names():
        entry = env.resolve(name)
        try:
            infer(env, (), entry.ty)
            if entry.body is not None:
                check(env, (), entry.body, entry.ty)
        except UptransError as exc:
            raise PreludeIllTyped(f"{name}: {exc}") from exc


@lru_cache(maxsize=1)
def _shared() -> Prelude:
    env = _assemble()
    _typecheck(env)
    env.freeze()
    return Prelude(env)


def load_prelude() -> Prelude:
    return _shared()
