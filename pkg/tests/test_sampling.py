import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from spectralpairs import (
    AliasReport,
    BandlimitedSignal,
    BoxDomain,
    FiniteSet,
    SamplePattern,
    alias_coefficients,
    minkowski_translate,
    reconstruct_spectrum,
    sample_signal,
    unit_box,
    verify_alias_cancellation,
)


def two_interval_domain():
    return minkowski_translate(unit_box(1), FiniteSet.from_ints(4, [0, 2]))


def reconstruction_grid(domain, per_box):
    return np.concatenate(
        [
            float(lo[0]) + (np.arange(per_box) + 0.5) * (float(hi[0]) - float(lo[0])) / per_box
            for lo, hi in domain.boxes
        ]
    )


class TestBandlimitedSignal:
    def test_indicator_sample_at_zero_is_measure(self):
        signal = BandlimitedSignal.indicator(two_interval_domain())
        assert signal.sample(0) == 2

    def test_zero_signal(self):
        signal = BandlimitedSignal(two_interval_domain(), ((0.0,), (0.0,)))
        pattern = SamplePattern.from_finite_set(FiniteSet.from_ints(4, [0, 1]), 4)
        assert all(v == 0 for v in sample_signal(signal, pattern))

    def test_unit_interval_quarter_sample(self):
        signal = BandlimitedSignal.indicator(BoxDomain.interval(0, 1))
        got = signal.sample(Fraction(1, 4))
        expected = (np.exp(1j * np.pi / 2) - 1) / (2j * np.pi * 0.25)
        assert abs(got - expected) < 1e-14

    def test_polynomial_piece_against_quadrature(self):
        # hat f = (xi - lo)^2 - 0.3 (xi - lo) on one box, sampled in closed form
        dom = BoxDomain.interval("1/2", "7/4")
        signal = BandlimitedSignal(dom, ((0.0, -0.3, 1.0),))
        for lam in (Fraction(0), Fraction(1, 3), Fraction(-5, 4), Fraction(2)):
            re, _ = integrate.quad(
                lambda x: (signal.hat(x) * np.exp(2j * np.pi * x * float(lam))).real, 0.5, 1.75
            )
            im, _ = integrate.quad(
                lambda x: (signal.hat(x) * np.exp(2j * np.pi * x * float(lam))).imag, 0.5, 1.75
            )
            assert abs(signal.sample(lam) - complex(re, im)) < 1e-10

    def test_hat_vanishes_off_domain(self):
        signal = BandlimitedSignal.indicator(two_interval_domain())
        assert signal.hat(1.5) == 0
        assert signal.hat(-0.1) == 0
        assert signal.hat(0.5) == 1


class TestSamplePattern:
    def test_points_sorted(self):
        pattern = SamplePattern.from_finite_set(FiniteSet.from_ints(4, [0, 1]), 2)
        expected = sorted(
            Fraction(n) + s for n in range(-2, 3) for s in (Fraction(0), Fraction(1, 4))
        )
        assert pattern.points() == expected
        assert len(pattern.points()) == 10

    def test_shift_validation(self):
        with pytest.raises(ValueError):
            SamplePattern((Fraction(1, 4), Fraction(1, 4)), 3)
        with pytest.raises(ValueError):
            SamplePattern((Fraction(5, 4),), 3)


class TestAliasCoefficients:
    def test_two_interval_values(self):
        a = FiniteSet.from_ints(4, [0, 2])
        j = FiniteSet.from_ints(4, [0, 1])
        table = {entry.k: entry for entry in alias_coefficients(a, j, (-3, 3))}
        assert table[0].value == 2
        assert abs(table[2].value) == 0
        assert abs(table[-2].value) == 0
        assert table[2].in_difference_set and table[-2].in_difference_set
        assert not table[1].in_difference_set

    def test_singleton_j_constant(self):
        a = FiniteSet.from_ints(5, [0, 1])
        j = FiniteSet.from_ints(5, [0])
        assert all(e.value == 1 for e in alias_coefficients(a, j, (-7, 7)))

    def test_order_six(self):
        a = FiniteSet.from_ints(6, [0, 3])
        j = FiniteSet.from_ints(6, [0, 1])
        table = {e.k: e.value for e in alias_coefficients(a, j, (-3, 3))}
        assert abs(table[3]) == 0  # 1 + e^{-pi i}


class TestAliasCancellation:
    def test_orthogonal_pair_passes(self):
        report = verify_alias_cancellation(
            FiniteSet.from_ints(4, [0, 2]), FiniteSet.from_ints(4, [0, 1]), (-5, 5)
        )
        assert isinstance(report, AliasReport)
        assert report.passed
        assert report.dc_value == 2.0
        assert set(report.cancelled) == {-2, 2}
        assert set(report.disjoint) == {-5, -4, -3, -1, 1, 3, 4, 5}
        assert not report.overlap_violations

    def test_non_orthogonal_j_names_violation(self):
        report = verify_alias_cancellation(
            FiniteSet.from_ints(4, [0, 2]), FiniteSet.from_ints(4, [0, 2]), (-5, 5)
        )
        assert not report.passed
        violated = {k for k, _ in report.symbol_violations}
        assert 2 in violated
        table = dict(report.symbol_violations)
        assert table[2] == pytest.approx(2.0)

    def test_singleton_a_vacuous(self):
        report = verify_alias_cancellation(
            FiniteSet.from_ints(4, [1]), FiniteSet.from_ints(4, [0, 1]), (-4, 4)
        )
        assert report.passed
        assert report.cancelled == ()

    def test_exact_dc_for_search_hits(self):
        from spectralpairs import PairKind, SearchQuery, enumerate_pairs

        for n in (4, 6, 8):
            result = enumerate_pairs(SearchQuery(n, 1, 2, PairKind.ORTHOGONAL_BASIS))
            for match in result.matches:
                report = verify_alias_cancellation(match.a, match.j, (-n, n))
                assert report.dc_value == 2.0
                assert report.passed


class TestReconstruction:
    def test_full_indicator_recovered_exactly(self):
        # hat f = chi_Omega is proportional to one basis exponential: every
        # truncation reproduces it to machine precision
        omega = two_interval_domain()
        signal = BandlimitedSignal.indicator(omega)
        j = FiniteSet.from_ints(4, [0, 1])
        grid = reconstruction_grid(omega, 128)
        for m in (8, 16):
            pattern = SamplePattern.from_finite_set(j, m)
            samples = sample_signal(signal, pattern)
            est = reconstruct_spectrum(samples, pattern, j, grid)
            assert np.abs(est - 1.0).max() < 1e-12

    def test_zero_signal_reconstructs_to_zero(self):
        omega = two_interval_domain()
        signal = BandlimitedSignal(omega, ((0.0,), (0.0,)))
        j = FiniteSet.from_ints(4, [0, 1])
        pattern = SamplePattern.from_finite_set(j, 4)
        est = reconstruct_spectrum(
            sample_signal(signal, pattern), pattern, j, np.array([0.1, 2.3])
        )
        assert np.abs(est).max() == 0

    def test_single_sample_constant(self):
        j = FiniteSet.from_ints(1, [0])
        pattern = SamplePattern.from_finite_set(j, 0)
        est = reconstruct_spectrum([1.0], pattern, j, np.array([0.0, 0.3, 0.9]))
        assert np.abs(est - 1.0).max() < 1e-14

    def test_one_translate_indicator_error_decays(self):
        # a signal whose expansion has infinitely many terms: truncation error
        # must fall as the pattern grows (values frozen from an oracle run:
        # 0.0766, 0.0539, 0.0349, 0.0081)
        omega = two_interval_domain()
        signal = BandlimitedSignal(omega, ((1.0,), (0.0,)))
        j = FiniteSet.from_ints(4, [0, 1])
        grid = reconstruction_grid(omega, 128)
        truth = np.array([signal.hat(x) for x in grid])
        denom = math.sqrt(float(np.mean(np.abs(truth) ** 2)))
        errors = []
        for m in (8, 16, 32, 64):
            pattern = SamplePattern.from_finite_set(j, m)
            samples = sample_signal(signal, pattern)
            est = reconstruct_spectrum(samples, pattern, j, grid)
            errors.append(math.sqrt(float(np.mean(np.abs(est - truth) ** 2))) / denom)
        for earlier, later in zip(errors, errors[1:]):
            assert later < earlier * 1.05
        assert errors[-1] < errors[0]
        assert errors[0] == pytest.approx(0.0766, abs=5e-3)

    def test_roundtrip_samples_of_reconstruction(self):
        # closed-form samples of f agree with numerically re-integrating the
        # truncated reconstruction of hat f (consistency of conventions)
        omega = two_interval_domain()
        signal = BandlimitedSignal(omega, ((1.0,), (0.5,)))
        j = FiniteSet.from_ints(4, [0, 1])
        pattern = SamplePattern.from_finite_set(j, 48)
        samples = sample_signal(signal, pattern)
        grid = reconstruction_grid(omega, 512)
        est = reconstruct_spectrum(samples, pattern, j, grid)
        # f(0) = integral of hat f: compare against the trapezoid of est
        recovered = float(np.mean(est.real) * float(omega.measure))
        assert recovered == pytest.approx(float(signal.sample(0).real), abs=5e-3)
