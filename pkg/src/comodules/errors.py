"""Exception types and the cooperative cancellation token."""

from __future__ import annotations


class ComodulesError(Exception):
    """Base class for all library errors."""


class UnsupportedRing(ComodulesError):
    """Raised when an operation needs a QF base ring (field or Z/n) but got Z."""


class PurityObstruction(ComodulesError):
    """Raised when a canonical corestriction does not exist because a purity
    condition fails (e.g. the induced coaction on a cotensor product does not
    land in the expected submodule)."""


class ExactnessNotCertified(ComodulesError):
    """Raised when a check needs an exactness certificate that was not
    established against the supplied probe family."""


class UnverifiedContext(ComodulesError):
    """Raised when strictness or equivalence extraction is requested for a
    Morita-Takeuchi context that has not passed verify_context."""


class AssociativityUnavailable(ComodulesError):
    """Raised when a context verification needs the cotensor associativity
    isomorphism but the required purity certificates fail."""


class HypothesisNotCertified(ComodulesError):
    """Raised by context synthesis when the input comodule fails one of the
    certified hypotheses (quasi-finiteness via freeness, coflatness,
    faithfulness, injector)."""


class CoendMismatch(ComodulesError):
    """Raised when the coendomorphism coalgebra fails to be isomorphic to the
    expected corner coalgebra."""


class NotFree(ComodulesError):
    """Raised when a construction needs a free module (e.g. the carrier of a
    coalgebra) but the computed module has honest relations."""


class Cancelled(ComodulesError):
    """Raised when a cooperative cancellation token was triggered."""


class CancelToken:
    """Cooperative cancellation for long-running checks.

    Long operations poll ``raise_if_cancelled`` between kernel computations;
    no threads are involved, the caller flips the flag from a signal handler
    or another thread.
    """

    __slots__ = ("_cancelled",)

    def __init__(self) -> None:
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def raise_if_cancelled(self) -> None:
        if self._cancelled:
            raise Cancelled("operation cancelled")
