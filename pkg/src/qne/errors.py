"""Exception types shared across the package."""


class QneError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(QneError):
    """Operands live in Hilbert spaces of incompatible dimensions."""


class NormalizationError(QneError):
    """A state vector is not normalized within tolerance."""


class OrthogonalityError(QneError):
    """Two basis vectors are not orthogonal within tolerance."""


class LabelError(QneError):
    """Basis or strategy labels are duplicated or unknown."""


class WeightError(QneError):
    """A tier weight vector is missing, mis-sized, or not strictly decreasing positive."""


class InvalidPlayError(QneError):
    """A play references strategies outside the players' strategy sets."""


class NotBasisValuedError(QneError):
    """A game image state is a proper superposition, so no ordinal reduction exists."""


class CriterionMismatchError(QneError):
    """An operation received a certificate produced under the wrong criterion."""


class InvalidBasisIndexError(QneError):
    """A basis index or label is out of range for the observable basis."""


class NoEquilibriumError(QneError):
    """The game admits no Nash equilibrium under the requested criterion."""


class DocumentError(QneError):
    """A game document failed schema or semantic validation.

    ``path`` names the offending field, e.g. ``players[0].strategies[1].matrix``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)
