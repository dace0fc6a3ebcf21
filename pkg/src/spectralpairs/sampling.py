"""Sampling and reconstruction for signals with spectrum in a union of intervals.

One-dimensional setting: the frequency support is Omega = [0,1) + A for
A inside Z_N, and samples are taken on the pattern Z + J/N.  The Fourier
transform of the sampled distribution is sum_k chi_hat_J(k) f_hat(. - k)
with chi_hat_J(k) = sum_{j in J} e^{-2 pi i j k / N}, so the aliasing
terms die in two ways: the symbol vanishes on (A - A) \\ {0}, and for the
remaining k the shifted supports Omega and Omega + k do not meet.  When
both happen, f_hat is recovered on Omega as (#J)^{-1} sum f(lambda)
e^{-2 pi i lambda xi}.

Test signals are stored in the frequency domain as per-box polynomials,
so time samples f(lambda) have closed forms and no FFT approximation
enters the verification path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._exact import cis, to_fraction
from .domains import BoxDomain, minkowski_translate, unit_box
from .errors import DimensionMismatchError
from .finite_pairs import FiniteSet, symbol_of_set


@dataclass(frozen=True, eq=False)
class BandlimitedSignal:
    """A signal given by its Fourier transform: one polynomial per box.

    ``pieces[i]`` holds complex coefficients (c_0, c_1, ...) of the
    polynomial sum_m c_m (xi - lo_i)^m on box i of ``spectrum_domain``;
    the transform vanishes off the domain by construction.
    """

    spectrum_domain: BoxDomain
    pieces: tuple[tuple[complex, ...], ...]

    def __post_init__(self):
        if self.spectrum_domain.dimension != 1:
            raise DimensionMismatchError("bandlimited signals are one-dimensional here")
        if len(self.pieces) != len(self.spectrum_domain.boxes):
            raise ValueError(
                "%d coefficient pieces for %d boxes"
                % (len(self.pieces), len(self.spectrum_domain.boxes))
            )
        object.__setattr__(
            self, "pieces", tuple(tuple(complex(c) for c in p) for p in self.pieces)
        )

    @classmethod
    def indicator(cls, domain: BoxDomain) -> "BandlimitedSignal":
        """The signal with f_hat = chi of the given union of intervals."""
        return cls(domain, tuple((1.0,) for _ in domain.boxes))

    def hat(self, xi: float) -> complex:
        """Evaluate the Fourier transform at a real frequency."""
        for (lo, hi), coeffs in zip(self.spectrum_domain.boxes, self.pieces):
            if float(lo[0]) <= xi < float(hi[0]):
                t = xi - float(lo[0])
                return sum(c * t**m for m, c in enumerate(coeffs))
        return 0j

    def sample(self, lam) -> complex:
        """Time-domain value f(lam) = integral of f_hat(xi) e^{2 pi i xi lam} d xi."""
        lam = to_fraction(lam)
        total = 0j
        for (lo, hi), coeffs in zip(self.spectrum_domain.boxes, self.pieces):
            total += _poly_box_transform(coeffs, lo[0], hi[0], lam)
        return total


def _poly_box_transform(coeffs, lo: Fraction, hi: Fraction, t: Fraction) -> complex:
    """integral over [lo, hi) of sum c_m (xi-lo)^m e^{2 pi i xi t} d xi, closed form."""
    length = hi - lo
    if t == 0:
        lf = float(length)
        return sum(c * lf ** (m + 1) / (m + 1) for m, c in enumerate(coeffs))
    phase = cis(t * lo)
    end = cis(t * length)
    tw = 2j * math.pi * float(t)
    lf = float(length)
    moments = [(end - 1.0) / tw]
    for m in range(1, len(coeffs)):
        moments.append((lf**m * end - m * moments[m - 1]) / tw)
    return phase * sum(c * moments[m] for m, c in enumerate(coeffs))


@dataclass(frozen=True)
class SamplePattern:
    """Sample locations {-M..M} + shifts, shifts distinct inside [0,1)."""

    shifts: tuple[Fraction, ...]
    truncation: int

    def __post_init__(self):
        shifts = tuple(to_fraction(s) for s in self.shifts)
        if any(not (0 <= s < 1) for s in shifts):
            raise ValueError("pattern shifts must lie in [0, 1)")
        if len(set(shifts)) != len(shifts):
            raise ValueError("pattern shifts must be distinct")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")
        object.__setattr__(self, "shifts", shifts)

    @classmethod
    def from_finite_set(cls, j: FiniteSet, truncation: int) -> "SamplePattern":
        if j.dimension != 1:
            raise DimensionMismatchError("sampling patterns are one-dimensional here")
        return cls(tuple(Fraction(p[0], j.modulus) for p in j.points), truncation)

    def points(self) -> list[Fraction]:
        m = self.truncation
        return sorted(Fraction(n) + s for s in self.shifts for n in range(-m, m + 1))


def sample_signal(f: BandlimitedSignal, p: SamplePattern) -> list[complex]:
    """f evaluated at every pattern point, aligned with ``p.points()``."""
    return [f.sample(lam) for lam in p.points()]


@dataclass(frozen=True)
class AliasCoefficient:
    k: int
    value: complex
    in_difference_set: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "value": [self.value.real, self.value.imag],
            "in_difference_set": self.in_difference_set,
        }


def _difference_set(a: FiniteSet) -> set[int]:
    reps = [p[0] for p in a.points]
    return {x - y for x in reps for y in reps}


def alias_coefficients(a: FiniteSet, j: FiniteSet, k_range) -> list[AliasCoefficient]:
    """Tabulate the symbol chi_hat_J(k) over an integer interval, flagging A - A."""
    if a.dimension != 1 or j.dimension != 1:
        raise DimensionMismatchError("aliasing analysis is one-dimensional here")
    k_min, k_max = int(k_range[0]), int(k_range[1])
    diffs = _difference_set(a)
    return [
        AliasCoefficient(k, symbol_of_set(j, k), k in diffs)
        for k in range(k_min, k_max + 1)
    ]


@dataclass(frozen=True, eq=False)
class AliasReport:
    """Aliasing-cancellation certificate for (A, J) on the range of k tested.

    dc: the k = 0 coefficient (must equal #J exactly).
    cancelled: k in (A-A) \\ {0} where the symbol vanishes numerically.
    symbol_violations: such k where it does not.
    disjoint: k outside A-A where |Omega and Omega+k| = 0 exactly.
    overlap_violations: such k with positive overlap (cannot happen for
    integer translates of unit intervals; kept for the record).
    """

    dc_value: float
    dc_expected: int
    cancelled: tuple[int, ...]
    symbol_violations: tuple[tuple[int, float], ...]
    disjoint: tuple[int, ...]
    overlap_violations: tuple[tuple[int, str], ...]

    @property
    def passed(self) -> bool:
        return (
            self.dc_value == float(self.dc_expected)
            and not self.symbol_violations
            and not self.overlap_violations
        )

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "dc_value": self.dc_value,
            "dc_expected": self.dc_expected,
            "cancelled": list(self.cancelled),
            "symbol_violations": [[k, v] for k, v in self.symbol_violations],
            "disjoint": list(self.disjoint),
            "overlap_violations": [[k, m] for k, m in self.overlap_violations],
        }


def verify_alias_cancellation(
    a: FiniteSet, j: FiniteSet, k_range, tolerance: float = 1e-10
) -> AliasReport:
    """Check the three ways an aliasing term can vanish, k over the given range.

    Case k = 0 contributes the factor #J; k in (A-A) \\ {0} must kill the
    symbol (this is where orthogonality of (A, J) enters and where a
    non-orthogonal J shows up as a named violation); all other k must
    have Omega and Omega + k disjoint, decided in rational arithmetic.
    """
    coefficients = alias_coefficients(a, j, k_range)
    omega = minkowski_translate(unit_box(1), a)
    dc = symbol_of_set(j, 0)
    cancelled, symbol_violations = [], []
    disjoint, overlap_violations = [], []
    for entry in coefficients:
        if entry.k == 0:
            continue
        if entry.in_difference_set:
            if abs(entry.value) < tolerance:
                cancelled.append(entry.k)
            else:
                symbol_violations.append((entry.k, abs(entry.value)))
        else:
            measure = omega.intersection_measure(omega.translate((entry.k,)))
            if measure == 0:
                disjoint.append(entry.k)
            else:
                overlap_violations.append((entry.k, str(measure)))
    return AliasReport(
        dc_value=dc.real,
        dc_expected=len(j),
        cancelled=tuple(cancelled),
        symbol_violations=tuple(symbol_violations),
        disjoint=tuple(disjoint),
        overlap_violations=tuple(overlap_violations),
    )


def reconstruct_spectrum(samples, p: SamplePattern, j: FiniteSet, eval_points) -> np.ndarray:
    """Truncated recovery of f_hat on Omega from pattern samples.

    f_hat_M(xi) = (#J)^{-1} sum_lambda f(lambda) e^{-2 pi i lambda xi};
    the exponent sign follows the derivation of the sampled-distribution
    transform (the e^{+2 pi i lambda xi} variant circulating elsewhere
    does not reproduce the samples).
    """
    lams = p.points()
    samples = np.asarray(samples, dtype=complex)
    if samples.shape != (len(lams),):
        raise ValueError("%d samples for %d pattern points" % (samples.size, len(lams)))
    xi = np.asarray(eval_points, dtype=float)
    lam_f = np.array([float(l) for l in lams])
    kernel = np.exp(-2j * np.pi * np.outer(xi, lam_f))
    return kernel @ samples / len(j)
