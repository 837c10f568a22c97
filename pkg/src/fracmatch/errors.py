"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 2); guard and
enumeration limits derive from :class:`LimitExceeded` (CLI exit code 3).
"""


class FracMatchError(Exception):
    exit_code = 2


class InputError(FracMatchError, ValueError):
    exit_code = 2


class LimitExceeded(FracMatchError):
    exit_code = 3


# hypergraph parsing / construction
class MalformedHeader(InputError):
    pass


class MalformedEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class WrongEdgeSize(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class DuplicateVertex(InputError):
    pass


class NotAPermutation(InputError):
    pass


class InvalidRational(InputError):
    pass


# parameter admissibility
class InvalidParameters(InputError):
    pass


class NonIntegerNS(InputError):
    def __init__(self, n, s):
        super().__init__(
            f"n*s = {n}*{s} is not an integer; the exact count is only defined "
            f"for integer n*s, use `bounds` for an interval"
        )


class IntegerNS(InputError):
    def __init__(self, n, s):
        super().__init__(f"n*s = {n}*{s} is an integer; use `verify extremal` instead")


class SBelowThreshold(InputError):
    def __init__(self, n, k, s):
        super().__init__(
            f"s = {s} <= k/n = {k}/{n}: only the empty hypergraph lacks such a matching"
        )


class SOutOfRange(InputError):
    def __init__(self, s):
        super().__init__(f"s = {s} must satisfy 0 < s <= 1")


class COutOfRange(InputError):
    pass


# threshold weights
class NegativeWeight(InputError):
    pass


class WeightsNotNormalized(InputError):
    pass


# limits
class TooManyEdges(LimitExceeded):
    pass


class EnumerationTooLarge(LimitExceeded):
    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"enumeration of {count} families exceeds limit {limit}")
