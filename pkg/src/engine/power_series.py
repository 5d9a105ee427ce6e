"""
Truncated formal power series over high-precision reals.

A PowerSeries holds coefficients c[0..order] of c[0] + c[1] z + ... + c[order] z^order.
Binary operations demand equal truncation order and equal precision context and
reject anything else; they never widen, narrow or re-round silently.
"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence, Tuple

from src.config.constants import ERROR_MESSAGES
from src.engine.precision import PrecisionContext
from src.utils.errors import SeriesDomainError, SeriesMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSeries:
    """Immutable truncated power series"""

    coeffs: Tuple
    context: PrecisionContext

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise SeriesDomainError("A power series needs at least the constant coefficient.")
        mpf = self.context.mpf
        object.__setattr__(self, 'coeffs', tuple(mpf(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return series_add(self, other)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return series_sub(self, other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return series_mul(self, other)

    def __neg__(self) -> "PowerSeries":
        return series_scale(self, -1)

    def __repr__(self) -> str:
        head = ", ".join(self.context.mp.nstr(c, 8) for c in self.coeffs[:6])
        more = ", ..." if self.order > 5 else ""
        return f"PowerSeries(order={self.order}, digits={self.context.working_digits}, [{head}{more}])"

    @classmethod
    def from_values(cls, values: Iterable, order: int, ctx: PrecisionContext) -> "PowerSeries":
        """Pad with zeros or truncate `values` to exactly `order` + 1 coefficients."""
        values = list(values)[:order + 1]
        values += [0] * (order + 1 - len(values))
        return cls(tuple(values), ctx)

    @classmethod
    def zero(cls, order: int, ctx: PrecisionContext) -> "PowerSeries":
        return cls.from_values([], order, ctx)

    @classmethod
    def one(cls, order: int, ctx: PrecisionContext) -> "PowerSeries":
        return cls.from_values([1], order, ctx)

    @classmethod
    def identity(cls, order: int, ctx: PrecisionContext) -> "PowerSeries":
        """The series w = z."""
        return cls.from_values([0, 1], order, ctx)

    @classmethod
    def geometric_shift(cls, order: int, ctx: PrecisionContext) -> "PowerSeries":
        """z/(1-z) = z + z^2 + z^3 + ..., i.e. s - 1 for s = 1/(1-z)."""
        return cls.from_values([0] + [1] * order, order, ctx)


def _check_compatible(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order or a.context != b.context:
        message = ERROR_MESSAGES["mismatch"].format(
            left_order=a.order, right_order=b.order,
            left_digits=a.context.working_digits, right_digits=b.context.working_digits)
        logger.debug(message)
        raise SeriesMismatchError(message)


def truncate(a: PowerSeries, order: int) -> PowerSeries:
    """Drop every coefficient above `order` (order must not grow)."""
    if order > a.order:
        raise SeriesMismatchError(
            f"Cannot truncate a series of order {a.order} up to order {order}.")
    return PowerSeries(a.coeffs[:order + 1], a.context)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_compatible(a, b)
    return PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.context)


def series_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_compatible(a, b)
    return PowerSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.context)


def series_scale(a: PowerSeries, factor) -> PowerSeries:
    factor = a.context.mpf(factor)
    return PowerSeries(tuple(factor * x for x in a.coeffs), a.context)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    _check_compatible(a, b)
    fdot = a.context.mp.fdot
    coeffs = []
    for n in range(a.order + 1):
        coeffs.append(fdot(a.coeffs[:n + 1], b.coeffs[n::-1]))
    return PowerSeries(tuple(coeffs), a.context)


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Long division a/b; b must have a nonzero constant term."""
    _check_compatible(a, b)
    if b.coeffs[0] == 0:
        raise SeriesDomainError("Division requires a nonzero constant term in the divisor.")
    fdot = a.context.mp.fdot
    head = b.coeffs[0]
    quotient = []
    for n in range(a.order + 1):
        carried = fdot(b.coeffs[1:n + 1], quotient[::-1]) if n else 0
        quotient.append((a.coeffs[n] - carried) / head)
    return PowerSeries(tuple(quotient), a.context)


def series_derivative(a: PowerSeries) -> PowerSeries:
    """d/dz; the order drops by one (a constant stays a zero constant)."""
    if a.order == 0:
        return PowerSeries((0,), a.context)
    return PowerSeries(tuple(i * a.coeffs[i] for i in range(1, a.order + 1)), a.context)


def series_integral(a: PowerSeries) -> PowerSeries:
    """Termwise antiderivative with zero constant; the order grows by one."""
    return PowerSeries((0,) + tuple(c / (i + 1) for i, c in enumerate(a.coeffs)), a.context)


def series_log(a: PowerSeries) -> PowerSeries:
    """log(a) for a[0] = 1, from L' = a'/a integrated termwise."""
    if a.coeffs[0] != 1:
        raise SeriesDomainError(ERROR_MESSAGES["log_domain"].format(
            value=a.context.mp.nstr(a.coeffs[0], 10)))
    if a.order == 0:
        return PowerSeries.zero(0, a.context)
    quotient = series_div(series_derivative(a), truncate(a, a.order - 1))
    return series_integral(quotient)


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a[0] = 0, from E' = a'E."""
    if a.coeffs[0] != 0:
        raise SeriesDomainError(ERROR_MESSAGES["exp_domain"].format(
            value=a.context.mp.nstr(a.coeffs[0], 10)))
    fdot = a.context.mp.fdot
    weighted = [k * a.coeffs[k] for k in range(a.order + 1)]
    result = [a.context.mpf(1)]
    for n in range(1, a.order + 1):
        result.append(fdot(weighted[1:n + 1], result[::-1]) / n)
    return PowerSeries(tuple(result), a.context)


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(z)) by Horner's rule over the series ring."""
    _check_compatible(outer, inner)
    if inner.coeffs[0] != 0:
        raise SeriesDomainError(ERROR_MESSAGES["compose_domain"].format(
            value=inner.context.mp.nstr(inner.coeffs[0], 10)))
    order, ctx = outer.order, outer.context
    result = PowerSeries.from_values([outer.coeffs[order]], order, ctx)
    for i in range(order - 1, -1, -1):
        product = series_mul(result, inner)
        result = PowerSeries((product.coeffs[0] + outer.coeffs[i],) + product.coeffs[1:], ctx)
    return result


def series_evaluate(a: PowerSeries, x):
    """Sum of the truncated series at the scalar x."""
    x = a.context.mpf(x)
    total = a.context.mpf(0)
    for c in reversed(a.coeffs):
        total = total * x + c
    return total


def binomial_series(k: int, order: int, ctx: PrecisionContext) -> PowerSeries:
    """(1 - z)^k truncated at `order`."""
    if k < 0:
        raise SeriesDomainError(f"binomial_series needs k >= 0, got {k}.")
    return PowerSeries.from_values(
        [(-1) ** i * comb(k, i) for i in range(min(k, order) + 1)], order, ctx)


def series_from_sequence(values: Sequence, ctx: PrecisionContext) -> PowerSeries:
    """Series whose i-th coefficient is values[i]; order is len(values) - 1."""
    return PowerSeries(tuple(values), ctx)
