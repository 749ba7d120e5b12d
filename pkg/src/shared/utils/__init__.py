# src/shared/utils/__init__.py

from src.shared.utils.exceptions import (
    SpectraException,
    ValidationError,
    ConfigurationError,
    DataSourceError,
    CalculationError,
    ClassifyAmbiguousError,
    NotParabolicError,
    NotHyperbolicError,
    DegenerateTupleError,
    EllipticInputError,
    WrongNormalizationError,
    NonRealRootError,
    IndiscreteSuspectedError,
    EstimationError,
    TypeMismatchError,
    NoHyperbolicFoundError,
    NoParabolicAboveOneError,
    InsufficientSamplesError,
    DegenerateWindowError,
    BudgetExceededError
)

__all__ = [
    'SpectraException',
    'ValidationError',
    'ConfigurationError',
    'DataSourceError',
    'CalculationError',
    'ClassifyAmbiguousError',
    'NotParabolicError',
    'NotHyperbolicError',
    'DegenerateTupleError',
    'EllipticInputError',
    'WrongNormalizationError',
    'NonRealRootError',
    'IndiscreteSuspectedError',
    'EstimationError',
    'TypeMismatchError',
    'NoHyperbolicFoundError',
    'NoParabolicAboveOneError',
    'InsufficientSamplesError',
    'DegenerateWindowError',
    'BudgetExceededError'
]
