"""Exception hierarchy shared by all latpoly modules."""


class LatPolyError(ValueError):
    """Base class for domain errors raised by latpoly."""


class DimensionError(LatPolyError):
    """Shapes or dimensions of the inputs do not fit together."""


class UnboundedError(LatPolyError):
    """A halfspace intersection is not bounded."""


class EmptyPolytopeError(LatPolyError):
    """A halfspace intersection is empty."""


class NonLatticeError(LatPolyError):
    """A computed vertex is not an integer point."""


class InvalidFaceError(LatPolyError):
    """The given vertices do not form a face of the polytope."""


class NotSmoothError(LatPolyError):
    """An operation needs smoothness at a vertex or along a face."""


class InvalidBlowUpError(LatPolyError):
    """The blow-up depth cuts more than the chosen face."""


class DomainError(LatPolyError):
    """The evaluation point lies outside the domain of the monomials."""


class GaussMapUndefinedError(LatPolyError):
    """The configuration is not k-jet spanned at the general point."""


class InconsistentBoundsError(LatPolyError):
    """Lower Seshadri bound exceeds the upper one; indicates a bug."""


class ValidationError(LatPolyError):
    """A classification data file failed validation."""

    def __init__(self, message, index=None):
        super().__init__(message if index is None else f"entry {index}: {message}")
        self.index = index
