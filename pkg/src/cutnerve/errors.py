"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A constructor or operation received an out-of-range argument."""


class InvalidFaceError(ValueError):
    """A face refers to unknown vertices or is not a face of the complex."""


class InvalidMatchingError(ValueError):
    """A matching violates the partial-matching or acyclicity requirements."""


class InvalidCollapseError(ValueError):
    """The requested (free face, coface) pair is not free in the complex."""


class VoidComplexError(ValueError):
    """The operation is undefined on the void complex."""


class EmptyCoverError(ValueError):
    """No cover can be built because the generating family is empty."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration budget was exceeded."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what} exceeded the configured budget of {budget}")
        self.what = what
        self.budget = budget


class GuardError(ValueError):
    """A scenario parameter lies outside its desk-scale guard."""
