"""
Application constants and enums.
"""
from enum import Enum
from typing import Dict, List


class Command(Enum):
    """CLI commands"""
    COEFFS = "coeffs"
    PHI = "phi"
    APPROX = "approx"
    TABLE = "table"
    CROSSING = "crossing"
    PLOT = "plot"
    REFERENCE = "reference"


class Scheme(Enum):
    """Recurrence approximation schemes"""
    A_TABLE = "A_table"
    B_TABLE = "B_table"
    A_LITERAL = "A_literal"
    B_LITERAL = "B_literal"


class OutputFormat(Enum):
    """Artifact formats"""
    CSV = "csv"
    JSON = "json"
    SVG = "svg"
    TEXT = "text"


class StieltjesSource(Enum):
    """Provenance of a Stieltjes table"""
    COMPUTED = "computed"
    REFERENCE = "reference"


class AnchorMode(Enum):
    """How the zero-crossing line is anchored"""
    AUTO = "auto"
    GAMMA = "gamma"
    FIRST = "first"


class Rounding(Enum):
    """Rounding rules for the 6-decimal comparison table"""
    DOWN = "down"
    HALF_EVEN = "half-even"


# First index each scheme can produce (antecedent availability)
SCHEME_FIRST_N: Dict[Scheme, int] = {
    Scheme.A_TABLE: 3,
    Scheme.B_TABLE: 4,
    Scheme.A_LITERAL: 3,
    Scheme.B_LITERAL: 4,
}

# Error messages
ERROR_MESSAGES: Dict[str, str] = {
    "precision": "Requested {field}={value} is below the minimum {minimum}.",
    "mismatch": "Cannot combine series of order {left_order}/{right_order} "
                "at {left_digits}/{right_digits} working digits.",
    "log_domain": "log requires unit constant term (got {value}).",
    "exp_domain": "exp requires zero constant term (got {value}).",
    "compose_domain": "compose requires the inner series to have zero constant term (got {value}).",
    "bernoulli_cap": "Bernoulli index {k} exceeds the configured cap {cap}.",
    "stieltjes_cap": "Stieltjes index {n} exceeds the configured cap {cap}.",
    "stieltjes_precision": "gamma_{n} cannot reach {wanted} digits under the Euler-Maclaurin caps; "
                           "about {achievable} digits are achievable.",
    "reference_missing": "Reference table {path} not found; run `python main.py reference` to build it.",
    "reference_format": "Malformed reference table line {line_no}: {line!r}",
    "reference_mismatch": "gamma_{n} deviates from the reference table by {deviation} "
                          "(allowed {allowed}).",
    "sequence_range": "{what}: need {needed} entries, sequence holds {available}.",
    "difference_order": "Difference order k={k} is outside 1..{max_k}.",
}

EXIT_CODES: Dict[str, int] = {
    "success": 0,
    "usage": 2,
    "computation": 3,
}

# Column layout of the published comparison table
TABLE_COLUMNS: List[str] = ['n', 'A', 'C', 'B']

MAX_DIFFERENCE_ORDER: int = 6
TABLE_DECIMALS: int = 6
REFERENCE_DIGITS: int = 50
REFERENCE_MAX_INDEX: int = 40

# Data ranges behind the six published figures: (kind, n_min, n_max, y_limits)
FIGURES: Dict[int, tuple] = {
    1: ('phi', 1, 15, None),
    2: ('phi', 10, 33, None),
    3: ('table', 4, 13, None),
    4: ('table', 12, 20, None),
    5: ('table', 20, 30, None),
    6: ('table', 20, 30, (0.020, 0.036)),
}
