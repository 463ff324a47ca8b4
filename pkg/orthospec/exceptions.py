class OrthospecError(Exception):
    """Base exception for orthospec errors."""
    pass

class NumericDomainError(OrthospecError):
    """Raised when a numeric function is evaluated outside its domain."""
    pass

class ExactArithmeticError(OrthospecError):
    """Raised on division by zero or other invalid exact operations."""
    pass

class FieldMismatchError(ExactArithmeticError):
    """Raised when two quadratic numbers live in different fields."""
    pass

class SurdParseError(ExactArithmeticError):
    """Raised when a surd literal does not match the accepted grammar."""
    pass

class GeometryError(OrthospecError):
    """Base class for structural errors in the geometry layer."""
    pass

class DegenerateCrossRatioError(GeometryError):
    """Raised when fewer than three of the four points are distinct."""
    pass

class CrossingGeodesicsError(GeometryError):
    """Raised when two geodesics cross, so their cross ratio leaves (0, 1]."""
    pass

class NonHyperbolicError(GeometryError):
    """Raised when a transformation is parabolic or elliptic."""
    pass

class FieldExtensionError(GeometryError):
    """Raised when an exact square root would leave the quadratic field."""
    pass

class InfeasiblePairError(GeometryError):
    """Raised when (T, P) fails the boundary feasibility check."""
    pass

class ModelMismatchError(GeometryError):
    """Raised when a feasible pair is enumerated with the wrong model."""
    pass

class IdentityError(OrthospecError):
    """Base class for catalog errors."""
    pass

class UnknownIdentityError(IdentityError):
    """Raised when an identity id is not in the catalog."""
    pass

class InvalidParameterError(IdentityError):
    """Raised when template parameters violate their preconditions."""
    pass

class VerificationError(OrthospecError):
    """Raised when summation detects a malformed series."""
    pass

class ArgumentRangeError(VerificationError):
    """Raised when a generated argument lies outside (0, 1]."""
    pass

class NonDecreasingTermsError(VerificationError):
    """Raised when a series tail is not strictly decreasing."""
    pass

class SignConventionError(VerificationError):
    """Raised when a cross ratio used as an argument is not positive."""
    pass

class CrossValidationError(VerificationError):
    """Raised when geometric and arithmetic terms disagree."""

    def __init__(self, message, index=None, geometric=None, arithmetic=None):
        super().__init__(message)
        self.index = index
        self.geometric = geometric
        self.arithmetic = arithmetic
