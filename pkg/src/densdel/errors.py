"""Exception types raised by the library."""


class DensdelError(Exception):
    """Base class for all library errors."""


class InvalidVertex(DensdelError):
    pass


class EmptyGraph(DensdelError):
    pass


class InvalidNetwork(DensdelError):
    pass


class InvalidHyperedge(DensdelError):
    pass


class UnsupportedSelfLoop(DensdelError):
    pass


class InvalidMarginal(DensdelError):
    pass


class InvalidOracle(DensdelError):
    pass


class TooLarge(DensdelError):
    pass


class InvalidEpsilon(DensdelError):
    pass


class InvalidCost(DensdelError):
    pass


class InvariantViolation(DensdelError):
    pass


class HypothesisViolated(DensdelError):
    pass


class UnsupportedInstance(DensdelError):
    pass


class NotFiniteCost(DensdelError):
    pass


class NotFeasible(DensdelError):
    pass


class ParseError(DensdelError):
    pass
