"""
Tests for Bernoulli numbers, Stieltjes constants and the reference table workflow.
"""
import os
from fractions import Fraction
from math import factorial

import mpmath
import pytest

from src.config.constants import StieltjesSource
from src.config.settings import Settings
from src.engine.power_series import series_evaluate
from src.engine.precision import PrecisionContext
from src.services.stieltjes_service import StieltjesService, StieltjesTable, odd_derivatives
from src.utils.errors import (
    BernoulliRangeError,
    ReferenceTableError,
    SequenceRangeError,
    StieltjesPrecisionError,
)
from src.utils.reference_utils import ReferenceUtils

GAMMA = {
    0: "0.57721566490153286060",
    1: "-0.072815845483676724861",
    2: "-0.0096903631928723184845",
    3: "0.0020538344203033458662",
}


def test_bernoulli_values(bernoulli_service):
    assert bernoulli_service.bernoulli(0) == 1
    assert bernoulli_service.bernoulli(1) == Fraction(-1, 2)
    assert bernoulli_service.bernoulli(2) == Fraction(1, 6)
    assert bernoulli_service.bernoulli(3) == 0
    assert bernoulli_service.bernoulli(12) == Fraction(-691, 2730)
    assert len(bernoulli_service.cached()) >= 13


def test_bernoulli_cap(bernoulli_service):
    with pytest.raises(BernoulliRangeError):
        bernoulli_service.bernoulli(bernoulli_service.cap + 1)
    with pytest.raises(BernoulliRangeError):
        bernoulli_service.bernoulli(-1)


def test_odd_derivatives_of_log_over_x():
    # f = 1/x: f' = -1/x^2, f''' = -6/x^4
    assert odd_derivatives(0, 2) == (((0, -1),), ((0, -6),))
    # f = ln x / x: f' = (1 - ln x)/x^2
    assert odd_derivatives(1, 1) == (((0, 1), (1, -1)),)


@pytest.mark.parametrize("n", sorted(GAMMA))
def test_known_stieltjes_constants(stieltjes_service, ctx, n):
    value = stieltjes_service.stieltjes(n, ctx)
    assert abs(value - ctx.mpf(GAMMA[n])) < ctx.mpf(10) ** -19


@pytest.mark.parametrize("n", [5, 12, 20])
def test_stieltjes_against_mpmath(stieltjes_service, ctx, n):
    expected = ctx.mp.stieltjes(n)
    assert abs(stieltjes_service.stieltjes(n, ctx) - expected) < ctx.tolerance


def test_stieltjes_is_memoized_per_precision(stieltjes_service):
    low, high = PrecisionContext(10, 10), PrecisionContext(40, 10)
    a = stieltjes_service.stieltjes(4, low)
    b = stieltjes_service.stieltjes(4, high)
    assert stieltjes_service.stieltjes(4, low) == a
    assert abs(a - low.mpf(b)) < low.tolerance


def test_stieltjes_cap(stieltjes_service, ctx):
    with pytest.raises(SequenceRangeError):
        stieltjes_service.stieltjes(stieltjes_service.cap + 1, ctx)


def test_scaled_stieltjes_decay(stieltjes_service, ctx):
    table = stieltjes_service.stieltjes_table(20, ctx)
    scaled = [abs(table[n]) / factorial(n) for n in range(21)]
    assert all(later < earlier for earlier, later in zip(scaled, scaled[1:]))
    assert table.source is StieltjesSource.COMPUTED


def test_shifted_zeta_series_coefficients(stieltjes_service, ctx):
    series = stieltjes_service.shifted_zeta_series(4, ctx)
    assert series[0] == 1
    assert abs(series[1] - ctx.mpf(GAMMA[0])) < ctx.tolerance
    assert abs(series[2] + ctx.mpf(GAMMA[1])) < ctx.tolerance
    assert abs(series[3] - ctx.mpf(GAMMA[2]) / 2) < ctx.tolerance


def test_shifted_zeta_series_sums_to_zeta(stieltjes_service):
    ctx = PrecisionContext(30, 15)
    series = stieltjes_service.shifted_zeta_series(40, ctx)
    # (s-1) zeta(s) at s = 2 is pi^2/6
    assert abs(series_evaluate(series, 1) - ctx.mp.pi ** 2 / 6) < ctx.mpf(10) ** -8
    # at s = 3/2 the independent Euler-Maclaurin zeta must agree
    half = series_evaluate(series, ctx.mpf("0.5"))
    assert abs(half - stieltjes_service.zeta_euler_maclaurin(ctx.mpf("1.5"), ctx) / 2) < ctx.mpf(10) ** -20


def test_zeta_euler_maclaurin(stieltjes_service, ctx):
    assert abs(stieltjes_service.zeta_euler_maclaurin(2, ctx) - ctx.mp.pi ** 2 / 6) < ctx.tolerance
    assert abs(stieltjes_service.zeta_euler_maclaurin(3, ctx) - ctx.mp.zeta(3)) < ctx.tolerance
    with pytest.raises(SequenceRangeError):
        stieltjes_service.zeta_euler_maclaurin(1, ctx)


def test_shifted_zeta_series_rejects_short_table(stieltjes_service, ctx):
    table = StieltjesTable((ctx.mpf(GAMMA[0]),), ctx, StieltjesSource.REFERENCE)
    with pytest.raises(SequenceRangeError):
        stieltjes_service.shifted_zeta_series(3, ctx, table)


def test_reference_round_trip(settings, tmp_path):
    service = StieltjesService(settings)
    table = service.build_reference_table(12, digits=50)
    path = service.write_reference_table(table, str(tmp_path / "reference.txt"))
    text = (tmp_path / "reference.txt").read_text()
    assert text.startswith("# ")
    assert "\n0 0.5772156649015328606065120900824024310421593359399" in text

    ctx = PrecisionContext(20, 15)
    loaded = service.load_reference_table(ctx, path)
    assert loaded.max_index == 12
    assert loaded.source is StieltjesSource.REFERENCE
    computed = service.stieltjes_table(12, ctx)
    assert service.validate_against_reference(computed, loaded) < ctx.tolerance


def test_reference_detects_wrong_value(settings, tmp_path, ctx):
    service = StieltjesService(settings)
    path = tmp_path / "reference.txt"
    path.write_text("0 0.5772156649015328606\n1 -0.0728\n")
    reference = service.load_reference_table(ctx, str(path))
    computed = service.stieltjes_table(1, ctx)
    with pytest.raises(ReferenceTableError):
        service.validate_against_reference(computed, reference)


def test_reference_validation_when_enabled(monkeypatch, tmp_path, ctx):
    path = tmp_path / "reference.txt"
    path.write_text("# wrong on purpose\n0 0.5772156649015328606\n1 0.5\n")
    monkeypatch.setenv("LIKEIPER_VALIDATE_REFERENCE", "true")
    monkeypatch.setenv("LIKEIPER_REFERENCE_TABLE", str(path))
    service = StieltjesService(Settings())
    with pytest.raises(ReferenceTableError):
        service.stieltjes_table(3, ctx)

    monkeypatch.setenv("LIKEIPER_REFERENCE_TABLE", str(tmp_path / "missing.txt"))
    assert StieltjesService(Settings()).stieltjes_table(3, ctx).max_index == 3


def test_reference_parse_errors(stieltjes_service, tmp_path, ctx):
    assert ReferenceUtils.parse(["# header", "", "0 1.5", "1 -2"]) == {0: "1.5", 1: "-2"}
    with pytest.raises(ReferenceTableError):
        ReferenceUtils.parse(["0 1.5 extra"])
    with pytest.raises(ReferenceTableError):
        ReferenceUtils.parse(["x 1.5"])
    with pytest.raises(ReferenceTableError):
        ReferenceUtils.parse(["0 1", "0 2"])
    with pytest.raises(ReferenceTableError):
        ReferenceUtils.read(str(tmp_path / "absent.txt"))

    gappy = tmp_path / "gappy.txt"
    gappy.write_text("0 1\n2 3\n")
    with pytest.raises(ReferenceTableError):
        stieltjes_service.load_reference_table(ctx, str(gappy))


def test_mpmath_global_precision_untouched(stieltjes_service):
    before = mpmath.mp.dps
    stieltjes_service.stieltjes(7, PrecisionContext(45, 15))
    assert mpmath.mp.dps == before


def test_euler_maclaurin_gives_up_under_tight_caps(monkeypatch, ctx):
    monkeypatch.setenv("LIKEIPER_EM_MAX_TERMS", "1")
    monkeypatch.setenv("LIKEIPER_EM_MAX_CUTOFF", "100")
    service = StieltjesService(Settings())
    with pytest.raises(StieltjesPrecisionError) as excinfo:
        service.stieltjes(0, ctx)
    assert excinfo.value.stage == "stieltjes"
    assert 0 < excinfo.value.achievable_digits < ctx.working_digits


def test_zeta_euler_maclaurin_gives_up_under_tight_caps(monkeypatch, ctx):
    # two correction terms at m = 10 * working digits leave an error near 1e-14
    monkeypatch.setenv("LIKEIPER_BERNOULLI_CAP", "4")
    service = StieltjesService(Settings())
    with pytest.raises(StieltjesPrecisionError) as excinfo:
        service.zeta_euler_maclaurin(2, ctx)
    assert excinfo.value.stage == "zeta"
    assert 0 < excinfo.value.achievable_digits < ctx.working_digits


def test_shipped_reference_table(settings):
    assert os.path.isfile(settings.REFERENCE_TABLE)
    service = StieltjesService(settings)
    ctx = PrecisionContext(20)
    reference = service.load_reference_table(ctx)
    assert reference.max_index == 40
    assert reference.source is StieltjesSource.REFERENCE
    computed = service.stieltjes_table(20, ctx)
    assert service.validate_against_reference(computed, reference) < ctx.tolerance

    wide = PrecisionContext(45)
    shipped = service.load_reference_table(wide)
    for n in (0, 9, 33, 40):
        assert abs(service.stieltjes(n, wide) - shipped[n]) < wide.tolerance, n


def test_validation_against_shipped_table_when_enabled(monkeypatch):
    monkeypatch.setenv("LIKEIPER_VALIDATE_REFERENCE", "true")
    service = StieltjesService(Settings())
    # more digits than the file holds: the file's own precision bounds the comparison
    ctx = PrecisionContext(60)
    assert service.stieltjes_table(6, ctx).max_index == 6
