"""Exception types shared across the package."""


class BarpackError(Exception):
    """Base class for every error raised by barpack."""


class HeightOutOfRange(BarpackError):
    """A bar height lies outside the half-open interval (0, 1]."""


class NonRepresentable(BarpackError):
    """A height is not an integer multiple of 1/D for the instance's D."""


class EmptyInstance(BarpackError):
    """An instance must contain at least one chart."""


class UnassignedChart(BarpackError):
    """A packing does not assign a start cell to every chart."""


class InfeasiblePacking(BarpackError):
    """Some cell's bar heights sum to more than the strip height."""


class OverlapTooLarge(BarpackError):
    """Requested overlap exceeds 2 cells or a chart's own length."""


class InfeasibleMerge(BarpackError):
    """The requested union would overload a shared cell."""


class TooLarge(BarpackError):
    """Input exceeds the brute-force enumeration guard."""


class NotAMatching(BarpackError):
    """Supplied pairs reuse a vertex or name a non-edge."""


class NotMaxWeight(BarpackError):
    """Supplied first-round matching is lighter than an optimal one."""


class ProvenanceGap(BarpackError):
    """Charts' provenance does not cover every instance id exactly once."""


class NotBigInstance(BarpackError):
    """Operation is only defined when every chart has a bar above 1/2."""


class JmaxTooSmall(BarpackError):
    """Model export needs at least two candidate cells."""


class KTooSmall(BarpackError):
    """Tight-family size parameter must be at least 1."""
