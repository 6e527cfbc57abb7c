"""Helpers for installing defined, trusted, and axiom constants."""

from __future__ import annotations

from ..env import (
    EnvEntry,
    GlobalEnv,
    ORIGIN_AXIOM,
    ORIGIN_DEFINED,
    ORIGIN_TRUSTED,
)
from ..reduction import analyze_strict_arg
from ..terms import Term


def define(env: GlobalEnv, name: str, ty: Term, body: Term, reducible: bool = True) -> None:
    """Add a transparent definition, probing which argument it eliminates."""
    strict = analyze_strict_arg(env, body) if reducible else None
    env.add(
        EnvEntry(
            name,
            ty,
            body=body,
            reducible=reducible,
            origin=ORIGIN_DEFINED,
            strict_arg=strict,
        )
    )


def trusted(env: GlobalEnv, name: str, ty: Term) -> None:
    """Add an opaque constant whose statement is accepted without a body.

    Trusted constants never appear in effectiveness reports; only axioms do.
    """
    env.add(EnvEntry(name, ty, origin=ORIGIN_TRUSTED))


def axiom(env: GlobalEnv, name: str, ty: Term) -> None:
    """Add an axiom: opaque, and flagged by effectiveness reports."""
    env.add(EnvEntry(name, ty, origin=ORIGIN_AXIOM))
