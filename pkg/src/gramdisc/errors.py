"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and a ``context``
dict so the CLI can emit ``{code, message, context}`` without inspecting
the type.
"""


class GramError(Exception):
    code = "error"

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self):
        return {"code": self.code, "message": self.message, "context": self.context}


class DomainError(GramError, ValueError):
    code = "domain"


class LengthMismatchError(GramError, ValueError):
    code = "length_mismatch"


class NoConvergence(GramError, ArithmeticError):
    """Iteration cap reached.  ``context`` holds the last good state."""

    code = "no_convergence"


class ExtremumLost(GramError, ArithmeticError):
    """The continued extremum folded or changed type along the path."""

    code = "extremum_lost"


class WindowEscape(GramError, ArithmeticError):
    """g_n(a) left the tracking window (g_{n-1}, g_{n+1})."""

    code = "window_escape"


class RangeUnclassifiable(GramError):
    code = "range_unclassifiable"


class SpecError(GramError, ValueError):
    """Malformed curve specification."""

    code = "bad_spec"
