"""Exception types shared across the toolkit."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class AxiomViolation(ValueError):
    """An input that was required to satisfy its defining axioms does not."""


class EmptyDecomposition(ValueError):
    """A tensor decomposition with zero summands was supplied."""


class EmptyParameterSpace(ValueError):
    """The search space contains no nonzero candidate."""


class BundleFormatError(ValueError):
    """A JSON document does not conform to the bundle schema."""
