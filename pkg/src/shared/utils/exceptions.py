# src/shared/utils/exceptions.py

from typing import Optional, Sequence


class SpectraException(Exception):
    """Base exception for all fuchsian-spectra errors."""
    pass


class ValidationError(SpectraException):
    """Raised when input validation fails."""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class ConfigurationError(SpectraException):
    """Raised when there's a configuration issue."""
    pass


class DataSourceError(SpectraException):
    """Raised when a group file or builtin surface cannot be loaded."""
    pass


class CalculationError(SpectraException):
    """Raised when a calculation fails."""
    pass


class ClassifyAmbiguousError(CalculationError):
    """Trace is on the parabolic band but the entries fit no parabolic normal form."""
    pass


class NotParabolicError(CalculationError):
    """Raised when an operation needs a parabolic map."""
    pass


class NotHyperbolicError(CalculationError):
    """Raised when an operation needs a hyperbolic map."""
    pass


class DegenerateTupleError(CalculationError):
    """Raised when two cross-ratio arguments coincide."""
    pass


class EllipticInputError(CalculationError):
    """Raised when an axis is requested for an elliptic or identity map."""
    pass


class WrongNormalizationError(CalculationError):
    """Raised when a verifier's normalization precondition does not hold."""
    pass


class NonRealRootError(CalculationError):
    """Raised when the Fricke relation has no real root for the requested traces."""

    def __init__(self, x: float, y: float, discriminant: float):
        self.x = x
        self.y = y
        self.discriminant = discriminant
        super().__init__(
            f"No real trace for AB at (x, y) = ({x}, {y}): discriminant {discriminant:.6g} < 0"
        )


class IndiscreteSuspectedError(CalculationError):
    """Raised when a generator pair fails the Jorgensen screen."""

    def __init__(self, pair: Sequence[int], value: float):
        self.pair = tuple(pair)
        self.value = value
        super().__init__(
            f"Generators {self.pair} fail the Jorgensen screen: {value:.6g} < 1"
        )


class EstimationError(CalculationError):
    """Base class for exponent and boundary estimation errors."""
    pass


class TypeMismatchError(EstimationError):
    """Raised when the marking sends a hyperbolic word to a non-hyperbolic one."""

    def __init__(self, word, source_kind: str, target_kind: str):
        self.word = word
        self.source_kind = source_kind
        self.target_kind = target_kind
        super().__init__(
            f"Word {word} is {source_kind} in the source but {target_kind} in the target"
        )


class NoHyperbolicFoundError(EstimationError):
    """Raised when no word up to the cutoff is hyperbolic on both sides."""
    pass


class NoParabolicAboveOneError(EstimationError):
    """Raised when every sampled parabolic has |omega| <= 1 in the source."""
    pass


class InsufficientSamplesError(EstimationError):
    """Raised when too few boundary samples are available."""

    def __init__(self, available: int, required: int):
        self.available = available
        self.required = required
        super().__init__(f"Need at least {required} samples, got {available}")


class DegenerateWindowError(EstimationError):
    """Raised when every sample in a fit window shares the anchor coordinate."""
    pass


class BudgetExceededError(SpectraException):
    """Raised when a word enumeration would exceed the configured cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"Enumeration needs {count} words, above the budget of {cap}; lower --max-len"
        )
