"""Exception hierarchy for exact linkage synthesis.

Every failure mode raised on a documented code path has its own class so
callers (and the CLI) can map errors to stages and exit codes without
string matching.
"""


class ScissorlinkError(Exception):
    """Base class for all package errors."""


# --- algebra ---------------------------------------------------------------

class NotInvertible(ScissorlinkError):
    """Dual quaternion with zero primal part has no inverse."""


class DegenerateActor(ScissorlinkError):
    """Dual quaternion cannot act on points (norm zero or not real)."""


class NotRotation(ScissorlinkError):
    """Dual quaternion fails the rotation-quaternion conditions."""


# --- polynomials -----------------------------------------------------------

class NotMonic(ScissorlinkError):
    """Division routine requires a monic divisor."""


class DivisionByZeroPoly(ScissorlinkError):
    """Division by the zero polynomial."""


class ZeroPolynomial(ScissorlinkError):
    """Operation undefined for the zero polynomial."""


class HasRealRoot(ScissorlinkError):
    """Real polynomial has a real root where positivity is required."""


class IrreducibleFactorNotQuadraticOverRationals(ScissorlinkError):
    """A rational-irreducible factor of degree >= 4 would need a real
    quadratic field extension to split; exact mode refuses to approximate."""


class NotIrreducible(ScissorlinkError):
    """Real quadratic is reducible over the reals."""


class NoRationalZeroInDirection(ScissorlinkError):
    """The quaternion zero in the requested direction has irrational norm."""


class NotRepresentable(ScissorlinkError):
    """The rational number is not a sum of three rational squares."""


class SearchExhausted(ScissorlinkError):
    """A bounded deterministic search hit its height/seed budget."""


# --- motion ----------------------------------------------------------------

class Unbounded(ScissorlinkError):
    """Curve is unbounded: x0 has a real root or too small a degree."""


class NotMotionPolynomial(ScissorlinkError):
    """Polynomial violates the Study condition or has a non-invertible
    leading coefficient."""


class NonInvertibleRemainderLead(ScissorlinkError):
    """Leading coefficient of the linear remainder is not invertible;
    the common-zero step does not apply (non-generic input)."""


class NotGeneric(ScissorlinkError):
    """Motion polynomial has a nontrivial maximal real primal factor."""


class NotTame(ScissorlinkError):
    """mrpf of the primal part and the dual norm share a factor."""


class ZeroPickExhausted(ScissorlinkError):
    """All candidate zeros of the quadratic factor failed downstream."""


# --- linkage ---------------------------------------------------------------

class FlipUndefined(ScissorlinkError):
    """Bennett flip undefined: conj(h1) = h2 or difference not invertible."""


class UserM0Invalid(ScissorlinkError):
    """User-supplied seed joint fails validation; carries the cell index."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class InvalidDegreeParity(ScissorlinkError):
    """Count bounds need an even degree d with 0 <= 2c <= d."""


# --- verify ----------------------------------------------------------------

class Mismatch(ScissorlinkError):
    """Replayed point disagrees with the curve at some parameter."""

    def __init__(self, message, t=None, drawn=None, expected=None):
        super().__init__(message)
        self.t = t
        self.drawn = drawn
        self.expected = expected


class ClosureViolation(ScissorlinkError):
    """A four-bar cell violates its loop-closure identity."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


# --- cli -------------------------------------------------------------------

class SpecParseError(ScissorlinkError):
    """Input document failed to parse; message carries the position."""


class PipelineError(ScissorlinkError):
    """Wraps an upstream error with the pipeline stage that raised it."""

    def __init__(self, stage, cause):
        super().__init__(f"{type(cause).__name__} at stage {stage}: {cause}")
        self.stage = stage
        self.cause = cause
