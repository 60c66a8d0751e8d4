"""Exception hierarchy shared by all cycalc modules."""


class CycalcError(Exception):
    """Base class for every error raised by this package."""


class ForeignClassError(CycalcError, ValueError):
    """A divisor class was used on a space it does not belong to."""


class UnknownMapError(CycalcError, KeyError):
    """A map id other than f, g, phi, phi_t was requested."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown map"


class NotExpressibleError(CycalcError, ValueError):
    """A class has components outside the basis an operation supports."""


class NotCalabiYauError(CycalcError, ValueError):
    """The top space of a cover diagram has non-trivial canonical class."""


class InconsistentDiagramError(CycalcError, ValueError):
    """Numerical data admit no non-negative integral count of fixed points."""


class SemiInvarianceError(CycalcError, ValueError):
    """A polynomial is not semi-invariant under a sign involution."""


class NotHypersurfaceError(CycalcError, ValueError):
    """Degenerate polynomial input (zero, or not quasi-homogeneous)."""


class NotZeroDimensionalError(CycalcError, ValueError):
    """A fixed stratum meets the variety in positive dimension."""

    def __init__(self, message, stratum=None):
        super().__init__(message)
        self.stratum = stratum


class CertificationError(CycalcError, RuntimeError):
    """Two independent counting routes disagree, or a certificate failed."""


class DatasetError(CycalcError, ValueError):
    """The classification fixture is malformed."""


class ChecksumError(DatasetError):
    """The shipped classification fixture does not match its recorded digest."""
