"""
Working-precision plumbing shared by every computation.

A PrecisionContext pairs the digits a caller wants back with the guard digits
spent on intermediate roundoff. Each context owns its own mpmath MPContext, so
no computation ever touches the global ``mpmath.mp`` state.
"""
import logging
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN
from functools import lru_cache

from mpmath.ctx_mp import MPContext

from src.config.constants import ERROR_MESSAGES
from src.utils.errors import PrecisionError

logger = logging.getLogger(__name__)

MIN_REQUESTED_DIGITS = 6
MIN_GUARD_DIGITS = 10


@lru_cache(maxsize=None)
def mp_context(dps: int) -> MPContext:
    """Return a private mpmath context fixed at `dps` decimal digits."""
    ctx = MPContext()
    ctx.dps = dps
    logger.debug(f"Created mpmath context at {dps} digits ({ctx.prec} bits)")
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output digits plus guard digits"""

    requested_digits: int
    guard_digits: int = 15

    def __post_init__(self):
        if self.requested_digits < MIN_REQUESTED_DIGITS:
            raise PrecisionError(ERROR_MESSAGES["precision"].format(
                field="requested_digits", value=self.requested_digits,
                minimum=MIN_REQUESTED_DIGITS))
        if self.guard_digits < MIN_GUARD_DIGITS:
            raise PrecisionError(ERROR_MESSAGES["precision"].format(
                field="guard_digits", value=self.guard_digits,
                minimum=MIN_GUARD_DIGITS))

    @classmethod
    def from_settings(cls, settings, digits: int = None, guard_digits: int = None) -> "PrecisionContext":
        config = settings.get_precision_config()
        return cls(
            requested_digits=digits if digits is not None else config['requested_digits'],
            guard_digits=guard_digits if guard_digits is not None else config['guard_digits'],
        )

    @property
    def working_digits(self) -> int:
        return self.requested_digits + self.guard_digits

    @property
    def mp(self) -> MPContext:
        return mp_context(self.working_digits)

    @property
    def tolerance(self):
        """10^-requested_digits as a working-precision real."""
        return self.mp.mpf(10) ** (-self.requested_digits)

    def mpf(self, value):
        """Create a real carrying exactly `working_digits` digits."""
        return self.mp.mpf(value)

    def doubled(self) -> "PrecisionContext":
        """Same request with twice the guard digits."""
        return PrecisionContext(self.requested_digits, 2 * self.guard_digits)

    def to_decimal(self, value) -> Decimal:
        """Decimal text of a working real at working digits."""
        return Decimal(self.mp.nstr(value, self.working_digits, strip_zeros=False))

    def format_fixed(self, value, decimals: int, rounding: str = ROUND_HALF_EVEN) -> str:
        """Fixed-point text with `decimals` places, never exponent notation."""
        quantum = Decimal(1).scaleb(-decimals)
        exact = self.to_decimal(value)
        digits_needed = max(exact.adjusted(), 0) + decimals + 2
        return format(exact.quantize(quantum, rounding=rounding,
                                     context=Context(prec=digits_needed)), "f")
