"""Exception hierarchy shared by all modules."""


class GradedAutError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(GradedAutError):
    """Objects from incompatible contexts were combined, or an object
    violating a structural invariant was constructed."""


class ValidationError(GradedAutError):
    """A mathematical precondition on the input does not hold."""


class InputError(GradedAutError):
    """A text input could not be parsed.

    Carries a list of (line, column, message) diagnostics.
    """

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        lines = [f"{ln}:{col}: {msg}" for ln, col, msg in self.diagnostics]
        super().__init__("\n".join(lines) if lines else "parse error")


class GuardError(GradedAutError):
    """A configured resource guard refused the computation."""
