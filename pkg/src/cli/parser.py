"""
Command-line parsing and run configuration.
"""
import argparse
import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.config.constants import (
    FIGURES,
    MAX_DIFFERENCE_ORDER,
    REFERENCE_DIGITS,
    REFERENCE_MAX_INDEX,
    AnchorMode,
    Command,
    OutputFormat,
    Rounding,
    Scheme,
)
from src.config.settings import Settings

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Validated configuration of one CLI run"""

    model_config = ConfigDict(frozen=True)

    command: Command
    n_max: int = 30
    digits: int = 20
    guard_digits: int = 15
    order_k: int = 2
    scheme: Scheme = Scheme.A_TABLE
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Optional[str] = None
    rounding: Rounding = Rounding.DOWN
    n1: int = 2
    n2: int = 3
    anchor: AnchorMode = AnchorMode.AUTO
    figure: Optional[int] = None
    series: str = 'phi'
    n_min: int = 1

    @field_validator('n_max', 'n_min')
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @field_validator('digits')
    @classmethod
    def _enough_digits(cls, value: int) -> int:
        if value < 6:
            raise ValueError("digits must be >= 6")
        return value

    @field_validator('guard_digits')
    @classmethod
    def _enough_guard(cls, value: int) -> int:
        if value < 10:
            raise ValueError("guard digits must be >= 10")
        return value

    @field_validator('order_k')
    @classmethod
    def _order_range(cls, value: int) -> int:
        if not 1 <= value <= MAX_DIFFERENCE_ORDER:
            raise ValueError(f"order must be in 1..{MAX_DIFFERENCE_ORDER}")
        return value

    @field_validator('figure')
    @classmethod
    def _known_figure(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value not in FIGURES:
            raise ValueError(f"figure must be one of {sorted(FIGURES)}")
        return value

    @field_validator('series')
    @classmethod
    def _known_series(cls, value: str) -> str:
        if value not in ('phi', 'table'):
            raise ValueError("series must be 'phi' or 'table'")
        return value

    @model_validator(mode='after')
    def _consistent(self) -> "RunConfig":
        is_plot = self.command is Command.PLOT
        if is_plot != (self.output_format is OutputFormat.SVG):
            raise ValueError("svg output is produced by the plot command only, and plot produces svg only")
        if self.command is Command.CROSSING and not 1 <= self.n1 < self.n2 <= self.n_max:
            raise ValueError("crossing needs 1 <= n1 < n2 <= n_max")
        if self.command is Command.PHI and self.n_max < self.order_k + 1:
            raise ValueError("phi needs n_max >= order + 1")
        if self.command is Command.TABLE and self.n_max < 2:
            raise ValueError("table needs n_max >= 2")
        if is_plot and self.figure is None and self.n_min > self.n_max:
            raise ValueError("plot needs n_min <= n_max")
        if is_plot and self.figure is None and self.series == 'phi' and self.n_max < self.order_k + 1:
            raise ValueError("phi plot needs n_max >= order + 1")
        return self


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n-max', type=int, default=None,
                        help=f"last index n (default {settings.N_MAX})")
    common.add_argument('--digits', type=int, default=None,
                        help=f"requested decimal digits (default {settings.DIGITS}, env LIKEIPER_DIGITS)")
    common.add_argument('--guard-digits', type=int, default=settings.GUARD_DIGITS,
                        help="extra working digits")
    common.add_argument('--format', dest='output_format', default=None,
                        choices=[f.value for f in OutputFormat])
    common.add_argument('--output', dest='output_path', default=None,
                        help="write the artifact to this path instead of stdout")
    common.add_argument('--log-level', default=settings.LOG_LEVEL)

    parser = argparse.ArgumentParser(
        prog='likeiper',
        description="Tiny Li-Keiper coefficients from log((s-1)zeta(s)) in z = 1 - 1/s.")
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser(Command.COEFFS.value, parents=[common], help="chi*(n) and lambda*(n)")

    phi = commands.add_parser(Command.PHI.value, parents=[common], help="binomial differences of lambda*")
    phi.add_argument('--order', dest='order_k', type=int, default=2)

    approx = commands.add_parser(Command.APPROX.value, parents=[common], help="recurrence approximations")
    approx.add_argument('--scheme', default=Scheme.A_TABLE.value, choices=[s.value for s in Scheme])

    table = commands.add_parser(Command.TABLE.value, parents=[common], help="A/C/B comparison table")
    table.add_argument('--rounding', default=Rounding.DOWN.value, choices=[r.value for r in Rounding])

    crossing = commands.add_parser(Command.CROSSING.value, parents=[common], help="straight-line zero crossing")
    crossing.add_argument('--n1', type=int, default=2)
    crossing.add_argument('--n2', type=int, default=3)
    crossing.add_argument('--anchor', default=AnchorMode.AUTO.value, choices=[a.value for a in AnchorMode])

    plot = commands.add_parser(Command.PLOT.value, parents=[common], help="step-function SVG")
    plot.add_argument('--figure', type=int, default=None, choices=sorted(FIGURES))
    plot.add_argument('--series', default='phi', choices=['phi', 'table'])
    plot.add_argument('--n-min', type=int, default=1)

    commands.add_parser(Command.REFERENCE.value, parents=[common],
                        help="build the Stieltjes reference table file")
    return parser


def build_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Fill command-dependent defaults and validate."""
    command = Command(args.command)
    is_reference = command is Command.REFERENCE
    n_max = args.n_max
    if n_max is None:
        n_max = REFERENCE_MAX_INDEX if is_reference else settings.N_MAX
    digits = args.digits
    if digits is None:
        digits = REFERENCE_DIGITS if is_reference else settings.DIGITS
    output_format = args.output_format
    if output_format is None:
        output_format = OutputFormat.SVG.value if command is Command.PLOT else OutputFormat.CSV.value

    values = {
        'command': command,
        'n_max': n_max,
        'digits': digits,
        'guard_digits': args.guard_digits,
        'output_format': output_format,
        'output_path': args.output_path,
    }
    for optional in ('order_k', 'scheme', 'rounding', 'n1', 'n2', 'anchor', 'figure', 'series', 'n_min'):
        if hasattr(args, optional):
            values[optional] = getattr(args, optional)
    return RunConfig(**values)
