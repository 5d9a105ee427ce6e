"""
Command handlers: one method per CLI command, each returning a Report.
"""
import logging
from typing import Callable, Dict

import mpmath

from src import __version__
from src.cli.parser import RunConfig
from src.config.constants import FIGURES, SCHEME_FIRST_N, TABLE_COLUMNS, Command, Scheme
from src.config.settings import Settings
from src.engine.precision import PrecisionContext
from src.services.bernoulli_service import BernoulliService
from src.services.stieltjes_service import StieltjesService
from src.services.tiny_service import TinyService
from src.utils.output_utils import Report
from src.utils.plot_utils import PlotUtils

logger = logging.getLogger(__name__)


class CommandHandler:
    """Runs CLI commands against the computational services"""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.bernoulli_service = BernoulliService(settings)
        self.stieltjes_service = StieltjesService(settings, self.bernoulli_service)
        self.tiny_service = TinyService(self.stieltjes_service)
        self._handlers: Dict[Command, Callable[[RunConfig, PrecisionContext], Report]] = {
            Command.COEFFS: self.coeffs_command,
            Command.PHI: self.phi_command,
            Command.APPROX: self.approx_command,
            Command.TABLE: self.table_command,
            Command.CROSSING: self.crossing_command,
            Command.PLOT: self.plot_command,
            Command.REFERENCE: self.reference_command,
        }

    def run(self, config: RunConfig) -> Report:
        """
        Executes one command.

        Args:
            config: Validated run configuration

        Returns:
            Report: Columns, rows, summary and metadata
        """
        ctx = PrecisionContext.from_settings(self.settings, config.digits, config.guard_digits)
        logger.info(f"Running {config.command.value} with n_max={config.n_max} at {ctx.working_digits} working digits")
        report = self._handlers[config.command](config, ctx)
        report.config = config.model_dump(mode='json')
        report.metadata = self._metadata(ctx)
        return report

    @staticmethod
    def _metadata(ctx: PrecisionContext) -> dict:
        return {
            'digits': ctx.requested_digits,
            'guard_digits': ctx.guard_digits,
            'working_digits': ctx.working_digits,
            'version': __version__,
            'mpmath_version': mpmath.__version__,
        }

    def coeffs_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        t = self.tiny_service.tiny_coefficients(config.n_max, ctx)
        rows = [
            [str(n), ctx.format_fixed(t.chi_at(n), config.digits), ctx.format_fixed(t.lambda_at(n), config.digits)]
            for n in range(1, t.n_max + 1)
        ]
        return Report(columns=['n', 'chi', 'lambda'], rows=rows)

    def phi_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        t = self.tiny_service.tiny_coefficients(config.n_max, ctx)
        phi = self.tiny_service.difference_sequence(t, config.order_k)
        rows = [[str(n), ctx.format_fixed(phi.at(n), config.digits)] for n in range(1, phi.n_max + 1)]
        if phi.sign_changes:
            summary = [f"sign change between n={n - 1} and n={n}" for n in phi.sign_changes]
        else:
            summary = [f"no sign change for n={config.order_k + 1}..{phi.n_max}"]
        return Report(columns=['n', f'phi{config.order_k}'], rows=rows, summary=summary)

    def approx_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        # chi*(n_max) is computed as well so the last prediction has a true value beside it
        t = self.tiny_service.tiny_coefficients(config.n_max, ctx)
        approximation = self.tiny_service.approximation(t, config.scheme, config.n_max)
        deviation = self.tiny_service.approximation_deviation(approximation, t)
        rows = []
        for n in range(approximation.first_n, approximation.last_n + 1):
            true = t.chi_at(n) if n <= t.n_max else None
            rows.append([
                str(n),
                ctx.format_fixed(approximation.at(n), config.digits),
                None if true is None else ctx.format_fixed(true, config.digits),
                None if n not in deviation else ctx.format_fixed(deviation[n], config.digits),
            ])
        worst = max((abs(d) for d in deviation.values()), default=None)
        summary = [f"scheme {config.scheme.value}, n={approximation.first_n}..{approximation.last_n}"]
        if worst is not None:
            summary.append(f"largest |deviation| {ctx.mp.nstr(worst, 6)}")
        return Report(columns=['n', config.scheme.value, 'chi', 'deviation'], rows=rows, summary=summary)

    def table_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        t = self.tiny_service.tiny_coefficients(config.n_max, ctx)
        table = self.tiny_service.comparison_table(t, config.n_max, config.rounding)
        rows = [[str(row.n), row.a, row.c, row.b] for row in table]
        summary = [f"A: quasi-Fibonacci ({Scheme.A_TABLE.value}), C: exact chi*, "
                   f"B: three antecedents ({Scheme.B_TABLE.value}); rounding {config.rounding.value}"]
        return Report(columns=list(TABLE_COLUMNS), rows=rows, summary=summary)

    def crossing_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        t = self.tiny_service.tiny_coefficients(config.n_max, ctx)
        line = self.tiny_service.line_crossing(t, config.n1, config.n2, config.anchor)
        crossing = None if line.crossing is None else ctx.format_fixed(line.crossing, config.digits)
        rows = [[
            str(line.n1), str(line.n2), line.mode.value, str(line.anchor_n),
            ctx.format_fixed(line.anchor_value, config.digits),
            ctx.format_fixed(line.slope, config.digits),
            crossing,
        ]]
        if line.has_crossing:
            summary = [f"line through n={line.n1},{line.n2} anchored at n={line.anchor_n} "
                       f"vanishes at n={ctx.mp.nstr(line.crossing, 6)}"]
        else:
            summary = [f"no crossing: slope from n={line.n1},{line.n2} is non-negative"]
        return Report(columns=['n1', 'n2', 'mode', 'anchor_n', 'anchor_value', 'slope', 'crossing'],
                      rows=rows, summary=summary)

    def plot_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        if config.figure is not None:
            kind, n_min, n_max, y_limits = FIGURES[config.figure]
            t = self.tiny_service.tiny_coefficients(n_max, ctx)
            series = self.tiny_service.figure_series(config.figure, t)
            title = f"Figure {config.figure}"
        else:
            kind, n_min, n_max, y_limits = config.series, config.n_min, config.n_max, None
            t = self.tiny_service.tiny_coefficients(n_max, ctx)
            if kind == 'phi':
                phi = self.tiny_service.difference_sequence(t, config.order_k)
                series = {'phi': {n: phi.at(n) for n in range(n_min, n_max + 1)}}
            else:
                series = {}
                # A starts at n=3 and B at n=4; shorter ranges plot whatever exists
                for label, scheme in (('A', Scheme.A_TABLE), ('C', None), ('B', Scheme.B_TABLE)):
                    if scheme is None:
                        series[label] = {n: t.chi_at(n) for n in range(n_min, n_max + 1)}
                    elif n_max >= SCHEME_FIRST_N[scheme]:
                        approx = self.tiny_service.approximation(t, scheme, n_max)
                        series[label] = {n: approx.at(n) for n in range(n_min, n_max + 1)}
            title = f"{kind} n={n_min}..{n_max}"
        plotted = {label: {n: float(v) for n, v in points.items() if v is not None}
                   for label, points in series.items()}
        svg = PlotUtils.step_svg(plotted, title, y_limits)
        rows = [[label, str(len(points))] for label, points in plotted.items()]
        return Report(columns=['series', 'points'], rows=rows, svg=svg,
                      summary=[f"{kind} over n={n_min}..{n_max}"])

    def reference_command(self, config: RunConfig, ctx: PrecisionContext) -> Report:
        table = self.stieltjes_service.build_reference_table(config.n_max, config.digits)
        path = self.stieltjes_service.write_reference_table(
            table, config.output_path or self.settings.REFERENCE_TABLE)
        rows = [[str(n), table.context.mp.nstr(v, config.digits, strip_zeros=False)]
                for n, v in enumerate(table.values)]
        return Report(columns=['n', 'gamma'], rows=rows,
                      summary=[f"wrote gamma_0..gamma_{table.max_index} to {path}"])
