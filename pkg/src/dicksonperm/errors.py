"""Exception types shared across the package."""


class DegreeTooLargeError(ValueError):
    """Exact coefficient form requested past the 63-bit-safe degree cap."""


class CapExceededError(ValueError):
    """A brute-force operation was asked to run past its configured cap."""


class UnsolvableTupleError(ValueError):
    """Residue tuple admits no common solution, so it has no kernel image."""


class KernelConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
