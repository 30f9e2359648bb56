"""Exception hierarchy.

Two families matter to callers: :class:`PreconditionError` (bad input, the
CLI maps it to exit code 2) and :class:`VerificationError` (a computed value
disagreed with a formula, exit code 1).
"""


class GhwlabError(Exception):
    pass


class PreconditionError(GhwlabError, ValueError):
    pass


class VerificationError(GhwlabError):
    pass


# field
class NotOddPrime(PreconditionError):
    pass


class SizeGuardExceeded(PreconditionError):
    pass


class ZeroHasNoLog(PreconditionError):
    pass


# cyclotomy
class NDoesNotDivide(PreconditionError):
    pass


class NoSolutionFound(VerificationError):
    pass


class NonIntegerCoefficient(VerificationError):
    pass


class BoundViolated(VerificationError):
    pass


class MultisetMismatch(VerificationError):
    pass


# codes
class OrderAssumptionViolated(PreconditionError):
    pass


class IsoPreconditionFailed(PreconditionError):
    pass


class SkewCanonicalUnavailable(PreconditionError):
    pass


class EnumerationBudgetExceeded(PreconditionError):
    pass


class WeightFormulaMismatch(VerificationError):
    pass


# ghw
class NotInjective(PreconditionError):
    pass


class PeriodsNotRational(PreconditionError):
    pass


class NonIntegerResult(VerificationError):
    pass


class CorollaryConflict(VerificationError):
    pass


class LemmaConflict(VerificationError):
    pass
