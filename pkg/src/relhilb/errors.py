"""Exception hierarchy.

Two families matter to callers (and to the CLI's exit codes):

* :class:`PreconditionError` -- the input violates an operation's contract
  (zero polynomial, centre lying on the hypersurface, inadmissible profile,
  ...).  The CLI exits with status 1.
* :class:`ConsistencyError` -- two independent computations disagree.  These
  must never fire; the CLI exits with status 2.
"""


class RelHilbError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"

    def to_json(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class PreconditionError(RelHilbError, ValueError):
    kind = "precondition"


class ConsistencyError(RelHilbError, RuntimeError):
    kind = "consistency"


class DomainError(PreconditionError):
    kind = "domain"


class UnsupportedModulusError(PreconditionError):
    kind = "unsupported-modulus"


class LineInHypersurfaceError(PreconditionError):
    kind = "line-in-hypersurface"


class CenterOnHypersurfaceError(PreconditionError):
    kind = "center-on-hypersurface"


class UnsupportedProfileError(PreconditionError):
    kind = "unsupported-profile"


class NonReducedCurveError(PreconditionError):
    kind = "non-reduced-curve"


class NonGeneralCenterError(PreconditionError):
    kind = "non-general-center"

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)

    def to_json(self) -> dict:
        out = super().to_json()
        out["diagnostics"] = self.diagnostics
        out["hint"] = "resample the projection centre"
        return out


class NotSquarefreeError(PreconditionError):
    """Raised by the mod-p factorisation on repeated factors.

    Monodromy sampling catches this and discards the sample.
    """

    kind = "not-squarefree"


class ParseError(PreconditionError):
    kind = "parse"

    def __init__(self, message, offset, token):
        super().__init__(f"{message} at byte {offset}: {token!r}")
        self.offset = offset
        self.token = token

    def to_json(self) -> dict:
        out = super().to_json()
        out["offset"] = self.offset
        out["token"] = self.token
        return out
