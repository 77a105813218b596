"""Exception hierarchy.

Three families, matching the CLI exit codes: parse failures, precision
failures (an answer exists but the input interval is too wide to decide it),
and contract violations (the caller asked for something undefined).
"""


class FareyTreeError(Exception):
    """Base class for all library errors."""


class ParseError(FareyTreeError, ValueError):
    pass


class PrecisionError(FareyTreeError):
    """The input is known only approximately and the answer is not decided."""


class PrecisionExhausted(PrecisionError):
    pass


class RationalHit(PrecisionError):
    """The input interval collapsed onto a vertex of the Farey graph."""


class Undecidable(PrecisionError):
    pass


class PoleInInterval(PrecisionError):
    pass


class ContractError(FareyTreeError, ValueError):
    """A precondition of an operation was violated."""


class ZeroOverZero(ContractError):
    pass


class InfinityNotOrdered(ContractError):
    pass


class NotUnimodular(ContractError):
    pass


class NotInTheta(ContractError):
    pass


class NotInfinityRational(ContractError):
    pass


class InvalidSequence(ContractError):
    pass


class HasInfiniteTail(ContractError):
    pass


class EmptySequence(ContractError):
    pass


class InsufficientTerms(ContractError):
    pass


class InvalidOffsets(ContractError):
    pass


class SameVertex(ContractError):
    pass


class SameBase(ContractError):
    pass
