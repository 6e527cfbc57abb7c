"""Error taxonomy shared by the kernel, translations, and registry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


class UptransError(Exception):
    """Base class; message is the payload."""


class UnboundVariable(UptransError):
    pass


class UnknownConstant(UptransError):
    pass


class NotAFunction(UptransError):
    pass


class TypeMismatch(UptransError):
    pass


class ConversionFailure(UptransError):
    pass


class BudgetExceeded(UptransError):
    pass


class LevelMismatch(UptransError):
    pass


class IllFormedTelescope(UptransError):
    pass


class UnrelatedConstant(UptransError):
    pass


class UnresolvedConstant(UptransError):
    pass


class DuplicateRelation(UptransError):
    pass


class IllTyped(UptransError):
    pass


class MissingPrefix(UptransError):
    pass


class NotALiteral(UptransError):
    pass


class PreludeIllTyped(UptransError):
    pass


class ParseError(UptransError):
    pass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a typecheck; never an exception."""

    ok: bool
    error: Optional[UptransError] = None

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def passed() -> "CheckResult":
        return CheckResult(True)

    @staticmethod
    def failed(err: UptransError) -> "CheckResult":
        return CheckResult(False, err)
