"""Exception hierarchy for the library.

Every error type carries a stable machine-readable ``code`` string so that
callers (notably the command line interface) can map failures to exit codes
and structured reports without parsing messages.
"""

from __future__ import annotations


class CubicFormsError(Exception):
    """Base class of all library errors."""

    code = "internal"


class PolyParseError(CubicFormsError):
    """Malformed polynomial text."""

    code = "syntax"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownVariableError(CubicFormsError):
    """A variable name outside the documented universe."""

    code = "unknown-variable"

    def __init__(self, name: str, offset: int | None = None):
        at = f" (offset {offset})" if offset is not None else ""
        super().__init__(f"unknown variable {name!r}{at}")
        self.name = name
        self.offset = offset


class UnboundVariableError(CubicFormsError):
    """A substitution or evaluation left a present variable without an image."""

    code = "unbound-variable"


class DegreeMismatchError(CubicFormsError):
    """An argument is not homogeneous of the degree the operation requires."""

    code = "degree-mismatch"


class InvalidOrderError(CubicFormsError):
    """Transvectant order must be a positive integer."""

    code = "invalid-order"


class CrossCheckError(CubicFormsError):
    """Two independent computation routes disagreed; a serious internal bug."""

    code = "cross-check"


class ZeroFormError(CubicFormsError):
    """The zero form was passed where a nonzero form is required."""

    code = "zero-form"


class IrreducibleError(CubicFormsError):
    """The quadratic does not split into two linear factors."""

    code = "irreducible"


class NotSingularError(CubicFormsError):
    """No nonzero apex: the cubic's Hessian does not vanish."""

    code = "not-singular"


class NotReducibleError(CubicFormsError):
    """The form is not completely reducible, so no factorization exists."""

    code = "not-reducible"


class PreconditionError(CubicFormsError):
    """A documented precondition of the operation is violated."""

    code = "precondition"


class ZeroLineError(CubicFormsError):
    """A zero vector was passed where a nonzero line or point is required."""

    code = "zero-line"


class ZeroBinaryCubicError(CubicFormsError):
    """The zero binary cubic cannot be factored."""

    code = "zero-binary-cubic"


class DegenerateTangentError(CubicFormsError):
    """A tangent line came out identically zero."""

    code = "degenerate-tangent"


class DualVanishesError(CubicFormsError):
    """The degree-six contravariant vanishes identically; no admissible u exists."""

    code = "dual-vanishes"


class CriterionInapplicableError(CubicFormsError):
    """The requested reducibility criterion is gated and its gate fails."""

    code = "criterion-inapplicable"


class InapplicableError(CubicFormsError):
    """The normalization requires a nonzero corner coefficient."""

    code = "inapplicable"


class NotApplicableError(CubicFormsError):
    """The two-cube split requires a vanishing Hessian and a nonzero dual."""

    code = "not-applicable"


class BuilderError(CubicFormsError):
    """An identity-corpus case is misconfigured (a bug in the corpus itself)."""

    code = "builder"
