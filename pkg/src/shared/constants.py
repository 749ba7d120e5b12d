# src/shared/constants.py

from enum import Enum


# Report schema
SCHEMA_VERSION = 1
PACKAGE_VERSION = "1.0.0"
INFINITY_TOKEN = "inf"

# Estimator defaults
DEFAULT_MAX_LEN = 10
DEFAULT_DEPTH = 12
DEFAULT_WORD_BUDGET = 10_000_000
DEFAULT_MAX_PAIRS = 20_000
DEFAULT_N_TUPLES = 2000
DEFAULT_SEED = 0

# Boundary fits
HOLDER_MIN_SAMPLES = 8
DEFAULT_HOLDER_WINDOW = 0.5
HOLDER_BAND = 0.10  # relative band for min 1/alpha against exp(d_ls)
DEFAULT_HOLDER_ANCHORS = 5
EQUIVARIANCE_CHECKS = 200

# rho_L: |omega_source| this close to 1 carries no exponent information
OMEGA_UNIT_BAND = 1e-9

# Lemma checks
SQUARE_LAW_ITERATIONS = 4
DEFAULT_LEMMA_NMAX = 20

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64

# Pseudo-paths for builtin surfaces
BUILTIN_PREFIX = "builtin:"
BUILTIN_TORUS = "torus"
BUILTIN_TPS = "tps"

# CSV layouts
TRACE_CSV_COLUMNS = ["estimate", "cutoff", "value", "witness"]
SAMPLE_CSV_COLUMNS = ["word", "x", "y", "kind"]


class IsometryKind(Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class EnumerationMode(Enum):
    ALL = "all"
    CYCLIC_REPS = "cyclic_reps"


class EstimateKind(Enum):
    DELTA = "delta"
    RHO = "rho"


class DistanceMethod(Enum):
    DELTA = "delta"
    RHO = "rho"
    BOTH = "both"


class SampleKind(Enum):
    ATTRACTING_HYP = "attracting_hyp"
    PARABOLIC_FIX = "parabolic_fix"


class RootChoice(Enum):
    PLUS = "plus"
    MINUS = "minus"


class Command(Enum):
    CLASSIFY = "classify"
    DISTANCE = "distance"
    VERIFY = "verify"
    BOUNDARY = "boundary"


class LemmaName(Enum):
    TRACE = "tr"          # trace exponent equals multiplier exponent
    SQUARE = "square"     # omega(h^-1 g0 h) = -omega(h)^2
    TRACE_SUM = "eq2"     # tr(g0 h) = |2 + omega(h)|
    CONJUGATE = "eq3"     # omega(g^n g0 g^-n) closed form
    EXPONENT_LIMIT = "bn"  # b_n -> a


# Error messages
ERROR_MESSAGES = {
    'BAD_MATRIX': "expected a 2x2 matrix [[a, b], [c, d]] of finite numbers",
    'NON_POSITIVE_DET': "determinant must be positive",
    'BAD_WORD': "expected a list of nonzero signed generator indices",
    'LETTER_OUT_OF_RANGE': "generator index outside 1..rank",
    'BAD_RANK': "rank must be an integer >= 2",
    'NO_PERIPHERALS': "at least one peripheral word is required",
    'UNKNOWN_BUILTIN': "unknown builtin surface",
}
