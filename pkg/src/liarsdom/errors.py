"""Exception hierarchy.

Every error raised by the toolkit derives from :class:`LiarsDomError`, so
callers (the CLI in particular) can map families of failures to exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class LiarsDomError(Exception):
    """Base class for all toolkit errors."""


class ParseError(LiarsDomError, ValueError):
    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.path = path
        self.line = line


# geometry
class CoordinateOutOfRange(LiarsDomError, ValueError):
    pass


class DuplicatePosition(LiarsDomError, ValueError):
    pass


class DuplicateId(LiarsDomError, ValueError):
    pass


class UnknownId(LiarsDomError, KeyError):
    pass


class EmptyInstance(LiarsDomError, ValueError):
    pass


# graphs
class InvalidGraph(LiarsDomError, ValueError):
    pass


class UnknownVertex(LiarsDomError, KeyError):
    pass


class OutOfRangeMember(LiarsDomError, ValueError):
    pass


# embedding
class DegreeTooHigh(LiarsDomError, ValueError):
    pass


class IsolatedVertex(LiarsDomError, ValueError):
    pass


class RoutingFailed(LiarsDomError):
    """The router gave up within its budget. Not a non-planarity verdict."""


class MissingVertex(LiarsDomError, ValueError):
    pass


class MissingEdgePath(LiarsDomError, ValueError):
    pass


class InvalidEmbedding(LiarsDomError, ValueError):
    pass


class InvalidDecomposition(LiarsDomError, ValueError):
    pass


# reduction
class NoFreeDirection(LiarsDomError):
    pass


class SeparationViolation(LiarsDomError):
    pass


# solvers
class BudgetExceeded(LiarsDomError):
    pass


class Infeasible(LiarsDomError):
    pass


# theorem
class NotDominating(LiarsDomError, ValueError):
    pass


class NotLiarsDominating(LiarsDomError, ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """A concrete witness that a proof-derived claim failed on an instance."""

    claim: str
    detail: str
    data: dict[str, Any] = field(default_factory=dict)


class FalsificationCertificate(LiarsDomError):
    """Raised when a step that the reduction argument guarantees fails verification."""

    def __init__(self, certificate: Certificate):
        super().__init__(f"{certificate.claim}: {certificate.detail}")
        self.certificate = certificate


class SupportNotContained(FalsificationCertificate):
    pass


class SizeBoundViolated(FalsificationCertificate):
    pass
