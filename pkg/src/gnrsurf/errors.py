"""Exception types shared across the package."""


class GnrError(Exception):
    """Base class for all errors raised by this package."""


class ExpressionError(GnrError):
    """Base class for expression parsing/evaluation failures."""


class ExpressionSyntaxError(ExpressionError):
    """Malformed expression text.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ExpressionDomainError(ExpressionError):
    """Evaluation left the real domain (negative sqrt, ln of non-positive, ...).

    Carries the offending subexpression text and the evaluation point so the
    failure can be reported precisely instead of leaking NaNs.
    """

    def __init__(self, message: str, subexpr: str, at: float):
        super().__init__(f"{message} in '{subexpr}' at s={at!r}")
        self.subexpr = subexpr
        self.at = at


class NonUnitSpeedError(GnrError):
    """Base curve is not arclength-parametrized and strict mode requires it."""


class DegenerateFrameError(GnrError):
    """No usable moving frame at the requested point (e.g. curvature ~ 0)."""


class CylindricalRulingError(GnrError):
    """The ruling direction is stationary; central point / frame undefined."""


class SingularPointError(GnrError):
    """The surface is singular at the requested (s, u)."""

    def __init__(self, s: float, u: float, f: float, g: float):
        super().__init__(
            f"singular surface point at (s={s!r}, u={u!r}): f={f!r}, g={g!r}"
        )
        self.s = s
        self.u = u
        self.f = f
        self.g = g


class NotDevelopableError(GnrError):
    """Operation only defined on developable surfaces (f == 0 near the point)."""


class SingularOrFoldPointError(GnrError):
    """Developable-surface operation hit g ~ 0 (fold / edge of regression)."""


class ConfigError(GnrError):
    """Scene configuration is invalid."""
