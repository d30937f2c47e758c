"""Exception hierarchy shared across the package."""


class EICartanError(Exception):
    pass


class InputError(EICartanError, ValueError):
    pass


class NotSymmetrizable(EICartanError):
    pass


class NotFiniteDimensional(EICartanError):
    pass


class NotCartanType(EICartanError):
    """Raised by ``recognize_cartan_type``; ``condition`` names the failed axiom."""

    def __init__(self, condition, message=""):
        self.condition = condition
        super().__init__(f"{condition}: {message}" if message else condition)


class TheoremViolation(EICartanError):
    """An isomorphism that must exist failed to verify. Indicates a bug."""


class TableMismatch(EICartanError):
    def __init__(self, row, message=""):
        self.row = row
        super().__init__(f"{row}: {message}" if message else row)
