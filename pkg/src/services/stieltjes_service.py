"""
Stieltjes constants and the expansion of (s-1)zeta(s) about s = 1.

zeta(s) = 1/(s-1) + sum_{n>=0} (-1)^n gamma_n (s-1)^n / n!, so with w = s - 1

    (s-1) zeta(s) = 1 + sum_{n>=0} (-1)^n gamma_n w^(n+1) / n!.

Each gamma_n comes from the Euler-Maclaurin form of its limit definition with
f(x) = ln(x)^n / x:

    gamma_n = sum_{k<=m} f(k) - ln(m)^(n+1)/(n+1) - f(m)/2
              - sum_j B_2j/(2j)! f^(2j-1)(m).

The odd derivatives of f are tracked exactly as integer combinations of
ln(x)^a / x^p, so no numerical differentiation is involved.
"""
import logging
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Optional, Tuple

from src.config.constants import ERROR_MESSAGES, REFERENCE_DIGITS, StieltjesSource
from src.config.settings import Settings
from src.engine.power_series import PowerSeries
from src.engine.precision import PrecisionContext, mp_context
from src.services.bernoulli_service import BernoulliService
from src.utils.errors import (
    ReferenceTableError,
    SequenceRangeError,
    StieltjesPrecisionError,
)
from src.utils.reference_utils import ReferenceUtils

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StieltjesTable:
    """gamma_0..gamma_M with provenance"""

    values: Tuple
    context: PrecisionContext
    source: StieltjesSource

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int):
        return self.values[n]


@lru_cache(maxsize=None)
def odd_derivatives(n: int, count: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """
    Exact odd derivatives of ln(x)^n / x.

    Entry j-1 describes f^(2j-1) as pairs (a, c) meaning c * ln(x)^a / x^(2j)
    for j = 1..count.
    """
    def differentiate(terms: Dict[int, int], pole: int) -> Dict[int, int]:
        # d/dx ln^a x / x^p = (a ln^(a-1) x - p ln^a x) / x^(p+1)
        out: Dict[int, int] = {}
        for a, c in terms.items():
            if a > 0:
                out[a - 1] = out.get(a - 1, 0) + a * c
            out[a] = out.get(a, 0) - pole * c
        return {a: c for a, c in out.items() if c}

    terms, pole = {n: 1}, 1
    derivatives = []
    for j in range(1, count + 1):
        for _ in range(1 if j == 1 else 2):
            terms = differentiate(terms, pole)
            pole += 1
        derivatives.append(tuple(sorted(terms.items())))
    return tuple(derivatives)


class StieltjesService:
    """Computes, memoizes and cross-checks Stieltjes constants"""

    def __init__(self, settings: Settings, bernoulli: Optional[BernoulliService] = None):
        self.settings = settings
        self.bernoulli = bernoulli or BernoulliService(settings)
        self.cap: int = settings.STIELTJES_CAP
        self.em_config: dict = settings.get_euler_maclaurin_config()
        self._cache: Dict[Tuple[int, int, int], object] = {}
        self._lock = threading.Lock()

    def default_cutoff(self, working_digits: int) -> int:
        return self.em_config['cutoff_factor'] * working_digits

    def stieltjes(self, n: int, ctx: PrecisionContext, cutoff: Optional[int] = None):
        """
        Return gamma_n at the working precision of `ctx`.

        Args:
            n: Index, at most the configured cap
            ctx: Precision context
            cutoff: Euler-Maclaurin summation cutoff m (default: factor * working digits)

        Raises:
            SequenceRangeError: If n is outside 0..cap
            StieltjesPrecisionError: If the target cannot be reached under the caps
        """
        if n < 0 or n > self.cap:
            raise SequenceRangeError(ERROR_MESSAGES["stieltjes_cap"].format(n=n, cap=self.cap),
                                     stage="stieltjes")
        cutoff = cutoff or self.default_cutoff(ctx.working_digits)
        key = (n, ctx.working_digits, cutoff)
        cached = self._cache.get(key)
        if cached is not None:
            return ctx.mpf(cached)

        value = self._euler_maclaurin(n, ctx.working_digits, cutoff)
        with self._lock:
            self._cache.setdefault(key, value)
        return ctx.mpf(value)

    def _euler_maclaurin(self, n: int, digits: int, cutoff: int):
        max_terms = min(self.em_config['max_terms'], self.bernoulli.cap // 2)
        threshold_exponent = digits + 2
        m = cutoff
        smallest_term = None
        while True:
            # ln(m)^(n+1) cancels against the head sum, so carry its magnitude as extra digits
            extra = math.ceil((n + 1) * math.log10(max(math.log(m), math.e))) + 10
            internal = -(-(digits + extra) // 10) * 10
            mp = mp_context(internal)
            threshold = mp.mpf(10) ** (-threshold_exponent)

            log_m = mp.log(m)
            head = mp.fsum(mp.log(k) ** n / k for k in range(2, m + 1))
            if n == 0:
                head += 1
            value = head - log_m ** (n + 1) / (n + 1) - log_m ** n / (2 * m)

            terms_used = 0
            converged = False
            for j, derivative in enumerate(odd_derivatives(n, max_terms), start=1):
                b = self.bernoulli.bernoulli(2 * j)
                weight = mp.mpf(b.numerator) / (b.denominator * factorial(2 * j))
                pole = mp.mpf(m) ** (2 * j)
                term = weight * mp.fsum(c * log_m ** a for a, c in derivative) / pole
                value -= term
                terms_used = j
                size = abs(term)
                if smallest_term is None or size < smallest_term:
                    smallest_term = size
                if size < threshold:
                    converged = True
                    break

            if converged:
                logger.debug(f"gamma_{n}: m={m}, {terms_used} correction terms, {internal} internal digits")
                return value

            if 2 * m > self.em_config['max_cutoff']:
                achievable = int(-mp.log10(smallest_term)) if smallest_term else 0
                message = ERROR_MESSAGES["stieltjes_precision"].format(
                    n=n, wanted=digits, achievable=achievable)
                logger.error(message)
                raise StieltjesPrecisionError(message, achievable_digits=achievable)
            logger.warning(f"gamma_{n}: {max_terms} correction terms insufficient at m={m}; retrying with m={2 * m}")
            m *= 2

    def stieltjes_table(self, max_index: int, ctx: PrecisionContext) -> StieltjesTable:
        """Computed gamma_0..gamma_max_index."""
        values = tuple(self.stieltjes(n, ctx) for n in range(max_index + 1))
        table = StieltjesTable(values, ctx, StieltjesSource.COMPUTED)
        if self.settings.VALIDATE_REFERENCE:
            self._validate_if_available(table)
        return table

    def shifted_zeta_series(self, order: int, ctx: PrecisionContext,
                            table: Optional[StieltjesTable] = None) -> PowerSeries:
        """
        (s-1) zeta(s) expanded in w = s - 1 up to w^order.

        Args:
            order: Truncation order N >= 1
            ctx: Precision context
            table: Optional Stieltjes table covering gamma_0..gamma_(N-1)

        Returns:
            PowerSeries: coefficients 1, gamma_0, -gamma_1/1!, gamma_2/2!, ...
        """
        if order < 1:
            raise SequenceRangeError(f"shifted_zeta_series needs order >= 1, got {order}.",
                                     stage="stieltjes")
        if table is None:
            table = self.stieltjes_table(order - 1, ctx)
        elif table.max_index < order - 1:
            raise SequenceRangeError(ERROR_MESSAGES["sequence_range"].format(
                what="shifted_zeta_series", needed=order, available=table.max_index + 1),
                stage="stieltjes")
        coeffs = [1]
        for n in range(order):
            sign = -1 if n % 2 else 1
            coeffs.append(sign * ctx.mpf(table[n]) / factorial(n))
        return PowerSeries(tuple(coeffs), ctx)

    def zeta_euler_maclaurin(self, s, ctx: PrecisionContext):
        """Real zeta(s), s > 1, by Euler-Maclaurin; independent of the gamma_n route."""
        mp = ctx.mp
        s = mp.mpf(s)
        if s <= 1:
            raise SequenceRangeError(f"zeta_euler_maclaurin needs s > 1, got {mp.nstr(s, 10)}.",
                                     stage="zeta")
        m = self.default_cutoff(ctx.working_digits)
        threshold = mp.mpf(10) ** (-(ctx.working_digits + 2))
        total = mp.fsum(mp.mpf(k) ** (-s) for k in range(1, m))
        total += mp.mpf(m) ** (1 - s) / (s - 1) + mp.mpf(m) ** (-s) / 2
        smallest_term = None
        for j in range(1, self.bernoulli.cap // 2 + 1):
            b = self.bernoulli.bernoulli(2 * j)
            term = (mp.mpf(b.numerator) / (b.denominator * factorial(2 * j))
                    * mp.rf(s, 2 * j - 1) * mp.mpf(m) ** (1 - s - 2 * j))
            total += term
            size = abs(term)
            if smallest_term is None or size < smallest_term:
                smallest_term = size
            if size < threshold:
                return total

        achievable = int(-mp.log10(smallest_term)) if smallest_term else 0
        message = (f"zeta({mp.nstr(s, 10)}): Euler-Maclaurin correction did not converge within "
                   f"{self.bernoulli.cap // 2} terms; wanted {ctx.working_digits} digits, "
                   f"reached about {achievable}.")
        logger.error(message)
        raise StieltjesPrecisionError(message, achievable_digits=achievable, stage="zeta")

    def build_reference_table(self, max_index: int, digits: int = REFERENCE_DIGITS) -> StieltjesTable:
        """
        gamma_0..gamma_max_index from two cutoffs m1 != m2 that must agree to `digits`.

        Raises:
            ReferenceTableError: If the two parameterizations disagree
        """
        ctx = PrecisionContext(digits, self.settings.GUARD_DIGITS)
        m1 = self.default_cutoff(ctx.working_digits)
        m2 = m1 * 3 // 2 + 7
        allowed = ctx.tolerance
        values = []
        for n in range(max_index + 1):
            first = self.stieltjes(n, ctx, cutoff=m1)
            second = self.stieltjes(n, ctx, cutoff=m2)
            deviation = abs(first - second)
            if deviation > allowed:
                raise ReferenceTableError(ERROR_MESSAGES["reference_mismatch"].format(
                    n=n, deviation=ctx.mp.nstr(deviation, 5), allowed=ctx.mp.nstr(allowed, 5)))
            values.append(second)
            logger.debug(f"Reference gamma_{n} agreed across m={m1} and m={m2}")
        return StieltjesTable(tuple(values), ctx, StieltjesSource.REFERENCE)

    def write_reference_table(self, table: StieltjesTable, path: Optional[str] = None) -> str:
        path = path or self.settings.REFERENCE_TABLE
        digits = table.context.requested_digits
        rendered = {n: table.context.mp.nstr(value, digits, strip_zeros=False)
                    for n, value in enumerate(table.values)}
        ReferenceUtils.write(path, rendered, comments=[
            f"Stieltjes constants gamma_0..gamma_{table.max_index}, {digits} significant digits",
            "Euler-Maclaurin at two independent cutoffs, agreement required at every digit",
        ])
        return path

    def load_reference_table(self, ctx: PrecisionContext, path: Optional[str] = None) -> StieltjesTable:
        path = path or self.settings.REFERENCE_TABLE
        raw = ReferenceUtils.read(path)
        expected = list(range(len(raw)))
        if sorted(raw) != expected:
            raise ReferenceTableError(f"Reference table {path} must list indices 0..{len(raw) - 1} without gaps.")
        values = tuple(ctx.mpf(raw[n]) for n in expected)
        return StieltjesTable(values, ctx, StieltjesSource.REFERENCE)

    def validate_against_reference(self, computed: StieltjesTable, reference: StieltjesTable):
        """
        Largest |computed - reference| over the shared indices.

        Raises:
            ReferenceTableError: If any deviation exceeds the coarser of the two tolerances
        """
        ctx = computed.context
        allowed = max(ctx.tolerance, ctx.mpf(reference.context.tolerance))
        worst = ctx.mpf(0)
        for n in range(min(computed.max_index, reference.max_index) + 1):
            deviation = abs(computed[n] - ctx.mpf(reference[n]))
            if deviation > allowed:
                raise ReferenceTableError(ERROR_MESSAGES["reference_mismatch"].format(
                    n=n, deviation=ctx.mp.nstr(deviation, 5), allowed=ctx.mp.nstr(allowed, 5)))
            worst = max(worst, deviation)
        return worst

    def _validate_if_available(self, table: StieltjesTable) -> None:
        # the file carries REFERENCE_DIGITS significant digits of values below 1
        ctx = table.context
        reference_ctx = PrecisionContext(min(ctx.requested_digits, REFERENCE_DIGITS - 1), ctx.guard_digits)
        try:
            reference = self.load_reference_table(reference_ctx)
        except ReferenceTableError as e:
            logger.warning(f"Skipping reference validation: {e}")
            return
        worst = self.validate_against_reference(table, reference)
        logger.info(f"Computed Stieltjes table matches reference (max deviation {table.context.mp.nstr(worst, 3)})")
