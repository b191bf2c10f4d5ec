"""Exception types shared across the package."""


class GquditError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPolynomial(GquditError):
    """A polynomial argument is malformed (e.g. the zero polynomial)."""


class IrreducibleRequired(GquditError):
    """A field modulus must be irreducible over F_2."""


class UnsupportedDegree(GquditError):
    """Extension degree outside the supported range 1..31."""


class FieldMismatch(GquditError):
    """Operands belong to different field constructions."""


class DivisionByZero(GquditError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatch(GquditError):
    """Vector or matrix shapes are inconsistent."""


class SelfDualRequired(GquditError):
    """Operation is only defined for a self-dual basis."""


class PureTypeRequired(GquditError):
    """Operation needs a pure-X or pure-Z Pauli word with positive sign."""


class TooLarge(GquditError):
    """Dense computation exceeds the configured dimension cap."""


class FullTableauRequired(GquditError):
    """Tableau must have m_X + m_Z = n rows."""


class RankDeficient(GquditError):
    """Rows of a generator block are linearly dependent."""


class NotCommuting(GquditError):
    """X-type and Z-type generator blocks are not orthogonal."""


class InvalidScale(GquditError):
    """Row scaling or gadget coefficients must be non-zero."""


class NotCssPreserving(GquditError):
    """Gate update would leave the CSS (pure-type rows) form."""


class InvalidGate(GquditError):
    """Unknown gate kind or invalid gate parameters."""


class NonUnitary(GquditError):
    """Requested gate is not unitary (e.g. multiplication by zero)."""


class WeightBelowDistance(GquditError):
    """Weight enumerator queried below the minimum distance."""


class InvalidSupport(GquditError):
    """Requested codeword roots are not evaluation points."""


class InvalidNesting(GquditError):
    """Quantum Reed-Solomon construction needs k1 <= k2."""


class DecodeFailure(GquditError):
    """Error weight exceeds the decoding radius or syndrome inconsistent."""
