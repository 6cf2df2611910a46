"""Exception hierarchy.

Three families, matching the CLI exit codes:

* ValidationError (exit 2): malformed or inconsistent input data.
* SolvabilityError (exit 3): a requested construction does not exist within
  the configured field-size budget.
* MathInconsistencyError (exit 4): an internal cross-check failed, e.g. a
  polynomial violating the Weil bound or a non-integral multiplicity.
"""


class WeilrepError(Exception):
    """Base class for all package errors."""

    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class ValidationError(WeilrepError):
    code = "validation"


class SolvabilityError(WeilrepError):
    code = "solvability"


class MathInconsistencyError(WeilrepError):
    code = "inconsistency"


# --- validation ---

class NotPrime(ValidationError):
    code = "not_prime"


class ReducibleModulus(ValidationError):
    code = "reducible_modulus"


class NoEmbedding(ValidationError):
    code = "no_embedding"


class ConstantF(ValidationError):
    code = "constant_f"


class ExponentDivisibleByP(ValidationError):
    code = "exponent_divisible_by_p"


class NotAbsolutelyIrreducible(ValidationError):
    code = "not_absolutely_irreducible"


class EquationMismatch(ValidationError):
    """An alleged automorphism does not preserve the curve equations."""

    code = "equation_mismatch"


class SingularMobius(ValidationError):
    code = "singular_mobius"


class GroupCapExceeded(ValidationError):
    code = "group_cap_exceeded"


class NoCanonicalShape(ValidationError):
    """No conjugate of the element is a scaling or translation on every
    orbit representative."""

    code = "no_canonical_shape"


class ShapeIncompatible(ValidationError):
    """Curve/automorphism pair fails the twisting preconditions."""

    code = "shape_incompatible"


class ClassMismatch(ValidationError):
    """Character table classes cannot be matched to the computed group."""

    code = "class_mismatch"


class MultipleEigenvalueClasses(ValidationError):
    """The local polynomial has more than one eigenvalue class, so no single
    unramified character splits off."""

    code = "multiple_eigenvalue_classes"


# --- solvability ---

class FieldBoundExceeded(SolvabilityError):
    code = "field_bound_exceeded"


# --- internal inconsistency ---

class WeilViolation(MathInconsistencyError):
    code = "weil_violation"


class NonIntegralCoefficient(MathInconsistencyError):
    code = "non_integral_coefficient"


class UnclassifiableRoot(MathInconsistencyError):
    code = "unclassifiable_root"


class NonIntegralMultiplicity(MathInconsistencyError):
    code = "non_integral_multiplicity"


class NonIntegralDimension(MathInconsistencyError):
    code = "non_integral_dimension"
