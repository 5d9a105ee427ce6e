"""
The tiny Li-Keiper coefficients and everything derived from them.

chi*(n) = lambda_tiny(n)/n is the n-th coefficient of log((s-1) zeta(s)) in
z = 1 - 1/s, and lambda*(n) = n chi*(n). From lambda* the service builds the
order-k binomial differences (coefficients of sum lambda*(m) z^(m-1) times
(1-z)^k), the recurrence approximations that assume a vanishing difference,
and straight-line zero-crossing estimates. All sequences are 1-based.
"""
import logging
from dataclasses import dataclass
from decimal import ROUND_DOWN, ROUND_HALF_EVEN
from math import comb
from typing import Dict, List, Optional, Tuple

from src.config.constants import (
    ERROR_MESSAGES,
    FIGURES,
    MAX_DIFFERENCE_ORDER,
    SCHEME_FIRST_N,
    TABLE_DECIMALS,
    AnchorMode,
    Rounding,
    Scheme,
)
from src.engine.power_series import (
    PowerSeries,
    binomial_series,
    series_compose,
    series_derivative,
    series_from_sequence,
    series_log,
    series_mul,
)
from src.engine.precision import PrecisionContext
from src.services.stieltjes_service import StieltjesService
from src.utils.errors import SequenceRangeError

logger = logging.getLogger(__name__)

ROUNDING_MODES = {
    Rounding.DOWN: ROUND_DOWN,
    Rounding.HALF_EVEN: ROUND_HALF_EVEN,
}


@dataclass(frozen=True)
class TinySequence:
    """chi*(n) and lambda*(n) for n = 1..N"""

    chi: Tuple
    lambda_star: Tuple
    context: PrecisionContext

    @classmethod
    def from_chi(cls, chi, ctx: PrecisionContext) -> "TinySequence":
        chi = tuple(ctx.mpf(c) for c in chi)
        return cls(chi, tuple(n * c for n, c in enumerate(chi, start=1)), ctx)

    @classmethod
    def from_lambda(cls, lambda_star, ctx: PrecisionContext) -> "TinySequence":
        lambda_star = tuple(ctx.mpf(v) for v in lambda_star)
        return cls(tuple(v / n for n, v in enumerate(lambda_star, start=1)), lambda_star, ctx)

    @property
    def n_max(self) -> int:
        return len(self.chi)

    def chi_at(self, n: int):
        self._require(n, "chi*")
        return self.chi[n - 1]

    def lambda_at(self, n: int):
        self._require(n, "lambda*")
        return self.lambda_star[n - 1]

    def _require(self, n: int, what: str) -> None:
        if n < 1 or n > self.n_max:
            raise SequenceRangeError(ERROR_MESSAGES["sequence_range"].format(
                what=f"{what}({n})", needed=n, available=self.n_max))


@dataclass(frozen=True)
class DifferenceSequence:
    """values[n] = coefficient of z^(n-1) in (sum lambda*(m) z^(m-1)) (1-z)^k"""

    order_k: int
    values: Tuple
    sign_changes: Tuple[int, ...]
    context: PrecisionContext

    @property
    def n_max(self) -> int:
        return len(self.values)

    def at(self, n: int):
        return self.values[n - 1]


@dataclass(frozen=True)
class ApproximationTable:
    """One recurrence column seeded with true antecedents at every step"""

    scheme: Scheme
    values: Dict[int, object]
    context: PrecisionContext
    seed_source: str = "true-values"

    @property
    def first_n(self) -> int:
        return SCHEME_FIRST_N[self.scheme]

    @property
    def last_n(self) -> int:
        return max(self.values) if self.values else self.first_n - 1

    def at(self, n: int):
        return self.values.get(n)


@dataclass(frozen=True)
class LineCrossing:
    """Zero of the straight line through two chi* values"""

    anchor_n: int
    anchor_value: object
    slope: object
    crossing: Optional[object]
    mode: AnchorMode
    n1: int
    n2: int

    @property
    def has_crossing(self) -> bool:
        return self.crossing is not None


@dataclass(frozen=True)
class TableRow:
    n: int
    a: Optional[str]
    c: str
    b: Optional[str]


class TinyService:
    """Builds the tiny sequence and its derived sequences"""

    def __init__(self, stieltjes_service: StieltjesService):
        self.stieltjes_service = stieltjes_service

    def tiny_coefficients(self, n_max: int, ctx: PrecisionContext) -> TinySequence:
        """
        chi*(1..N) from log((s-1) zeta(s)) with s - 1 = z/(1-z).

        All intermediate series carry order N: z^k maps to degree >= k, so
        no lookahead is required.
        """
        if n_max < 1:
            raise SequenceRangeError(f"tiny_coefficients needs N >= 1, got {n_max}.")
        logger.info(f"Computing tiny coefficients up to n={n_max} at {ctx.working_digits} working digits")
        outer = self.stieltjes_service.shifted_zeta_series(n_max, ctx)
        composed = series_compose(outer, PowerSeries.geometric_shift(n_max, ctx))
        logarithm = series_log(composed)
        # series_log fixes the z^0 coefficient; it is never stored
        assert logarithm[0] == 0
        return TinySequence.from_chi(logarithm.coeffs[1:], ctx)

    @staticmethod
    def chi_series(t: TinySequence) -> PowerSeries:
        """sum chi*(n) z^n, order N."""
        return series_from_sequence((0,) + t.chi, t.context)

    @staticmethod
    def lambda_series(t: TinySequence) -> PowerSeries:
        """sum lambda*(n) z^n as z * d/dz of the chi* series."""
        derivative = series_derivative(TinyService.chi_series(t))
        return series_from_sequence((0,) + derivative.coeffs, t.context)

    @staticmethod
    def finite_difference(t: TinySequence, k: int, n: int):
        """sum_j (-1)^j C(k, j) lambda*(n - j), dropping terms with n - j < 1."""
        mp = t.context.mp
        terms = [(-1) ** j * comb(k, j) * t.lambda_at(n - j) for j in range(k + 1) if n - j >= 1]
        return mp.fsum(terms)

    @staticmethod
    def difference_sequence(t: TinySequence, k: int) -> DifferenceSequence:
        """
        Order-k binomial difference of lambda* through the (1-z)^k product.

        Sign changes are collected over the pure finite-difference range, i.e.
        indices n with n - 1 > k; for k = 2 the first positive value after the
        change is reported (the sign flips on the interval (13, 14)).
        """
        if k < 1 or k > MAX_DIFFERENCE_ORDER:
            raise SequenceRangeError(ERROR_MESSAGES["difference_order"].format(
                k=k, max_k=MAX_DIFFERENCE_ORDER), stage="difference")
        if t.n_max < k + 1:
            raise SequenceRangeError(ERROR_MESSAGES["sequence_range"].format(
                what=f"difference of order {k}", needed=k + 1, available=t.n_max),
                stage="difference")
        ctx = t.context
        shifted = series_from_sequence(t.lambda_star, ctx)
        product = series_mul(shifted, binomial_series(k, shifted.order, ctx))
        values = product.coeffs
        sign_changes = tuple(
            n for n in range(k + 2, len(values) + 1)
            if values[n - 2] * values[n - 1] < 0
        )
        logger.debug(f"Order-{k} differences up to n={len(values)}: sign changes at {list(sign_changes)}")
        return DifferenceSequence(k, values, sign_changes, ctx)

    @staticmethod
    def approximation(t: TinySequence, scheme: Scheme, n_max: int) -> ApproximationTable:
        """
        Recurrence predictions of chi*(n) for n = first..n_max from true antecedents.

        A_table:   (2 lambda*(n-1) - lambda*(n-2)) / n
        B_table:   (3 lambda*(n-1) - 3 lambda*(n-2) + lambda*(n-3)) / n
        A_literal: 2 chi*(n-1) - chi*(n-2)
        B_literal: 3 chi*(n-1) - 3 chi*(n-2) + chi*(n-3)
        """
        first = SCHEME_FIRST_N[scheme]
        if n_max < first:
            raise SequenceRangeError(
                f"{scheme.value} starts at n={first}; n_max={n_max} is below it.",
                stage="approximation")
        if t.n_max < n_max - 1:
            raise SequenceRangeError(ERROR_MESSAGES["sequence_range"].format(
                what=f"{scheme.value} up to n={n_max}", needed=n_max - 1,
                available=t.n_max), stage="approximation")
        lam, chi = t.lambda_at, t.chi_at
        values = {}
        for n in range(first, n_max + 1):
            if scheme is Scheme.A_TABLE:
                value = (2 * lam(n - 1) - lam(n - 2)) / n
            elif scheme is Scheme.B_TABLE:
                value = (3 * lam(n - 1) - 3 * lam(n - 2) + lam(n - 3)) / n
            elif scheme is Scheme.A_LITERAL:
                value = 2 * chi(n - 1) - chi(n - 2)
            else:
                value = 3 * chi(n - 1) - 3 * chi(n - 2) + chi(n - 3)
            values[n] = value
        return ApproximationTable(scheme, values, t.context)

    @staticmethod
    def approximation_deviation(table: ApproximationTable, t: TinySequence) -> Dict[int, object]:
        """approximation minus true chi*(n) wherever the truth is known."""
        return {n: v - t.chi_at(n) for n, v in table.values.items() if n <= t.n_max}

    @staticmethod
    def line_crossing(t: TinySequence, n1: int, n2: int,
                      mode: AnchorMode = AnchorMode.AUTO) -> LineCrossing:
        """
        Zero of the line with slope (chi*(n2) - chi*(n1)) / (n2 - n1).

        GAMMA anchors the line at (1, chi*(1)) = (1, gamma), FIRST at
        (n1, chi*(n1)); AUTO means GAMMA for (n1, n2) = (2, 3), FIRST otherwise.
        A non-negative slope yields no crossing.
        """
        if not 1 <= n1 < n2 <= t.n_max:
            raise SequenceRangeError(
                f"line_crossing needs 1 <= n1 < n2 <= {t.n_max}, got n1={n1}, n2={n2}.",
                stage="crossing")
        if mode is AnchorMode.AUTO:
            mode = AnchorMode.GAMMA if (n1, n2) == (2, 3) else AnchorMode.FIRST
        anchor_n = 1 if mode is AnchorMode.GAMMA else n1
        anchor_value = t.chi_at(anchor_n)
        slope = (t.chi_at(n2) - t.chi_at(n1)) / (n2 - n1)
        crossing = anchor_n + anchor_value / abs(slope) if slope < 0 else None
        if crossing is None:
            logger.info(f"No zero crossing: slope from n={n1},{n2} is non-negative")
        return LineCrossing(anchor_n, anchor_value, slope, crossing, mode, n1, n2)

    @staticmethod
    def comparison_table(t: TinySequence, n_max: int,
                         rounding: Rounding = Rounding.DOWN) -> List[TableRow]:
        """
        Rows (n, A, C, B) for n = 2..n_max at six decimals; absent cells are None.

        The published table truncates at the sixth decimal, hence the default.
        """
        if n_max > t.n_max or n_max < 2:
            raise SequenceRangeError(ERROR_MESSAGES["sequence_range"].format(
                what=f"comparison table up to n={n_max}", needed=n_max, available=t.n_max),
                stage="table")
        ctx = t.context
        mode = ROUNDING_MODES[rounding]
        column_a = TinyService.approximation(t, Scheme.A_TABLE, n_max) if n_max >= 3 else None
        column_b = TinyService.approximation(t, Scheme.B_TABLE, n_max) if n_max >= 4 else None

        def cell(table: Optional[ApproximationTable], n: int) -> Optional[str]:
            if table is None or table.at(n) is None:
                return None
            return ctx.format_fixed(table.at(n), TABLE_DECIMALS, mode)

        return [
            TableRow(n, cell(column_a, n), ctx.format_fixed(t.chi_at(n), TABLE_DECIMALS, mode), cell(column_b, n))
            for n in range(2, n_max + 1)
        ]

    @staticmethod
    def figure_series(figure: int, t: TinySequence) -> Dict[str, Dict[int, object]]:
        """Data behind one of the six published figures, keyed by series label."""
        kind, n_min, n_max, _ = FIGURES[figure]
        if kind == 'phi':
            phi = TinyService.difference_sequence(t, 2)
            return {'phi': {n: phi.at(n) for n in range(n_min, n_max + 1)}}
        column_a = TinyService.approximation(t, Scheme.A_TABLE, n_max)
        column_b = TinyService.approximation(t, Scheme.B_TABLE, n_max)
        return {
            'A': {n: column_a.at(n) for n in range(n_min, n_max + 1)},
            'C': {n: t.chi_at(n) for n in range(n_min, n_max + 1)},
            'B': {n: column_b.at(n) for n in range(n_min, n_max + 1)},
        }
