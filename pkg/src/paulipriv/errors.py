"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed textual or JSON input (bad Pauli string, bad file schema)."""


class PreconditionError(ValueError):
    """An operation was called with inputs that violate its contract."""


class NumericalAmbiguityError(RuntimeError):
    """A rank or eigenvalue-cluster decision fell inside the ambiguity window.

    Raised instead of silently guessing when singular values or eigenvalue
    gaps land within a factor of ten of the decision threshold.
    """
