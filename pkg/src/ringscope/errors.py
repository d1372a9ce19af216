"""Exception types shared across the package."""


class RingScopeError(Exception):
    """Base class for all package errors."""


class InputError(RingScopeError):
    """Malformed user input (bad spec, bad file, dimension mismatch)."""


class BoundExceededError(RingScopeError):
    """An enumeration guard was hit; raise the bound to proceed."""


class NotALatticeError(RingScopeError):
    """A poset handed to the lattice builder is not a lattice."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class TheoremViolationError(RingScopeError):
    """A structural cross-check failed; this signals an internal bug."""
