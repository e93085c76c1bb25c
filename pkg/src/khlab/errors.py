"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed braid text, PD text, or inconsistent diagram data."""


class NonPositiveWordError(InputError):
    """A positive-braid-only operation received a word with negative letters."""


class CapExceededError(RuntimeError):
    """The crossing count exceeds the configured resource cap."""

    def __init__(self, crossings: int, cap: int):
        super().__init__(
            f"diagram has {crossings} crossings, exceeding the cap of {cap}; "
            f"raise the cap explicitly to proceed"
        )
        self.crossings = crossings
        self.cap = cap
