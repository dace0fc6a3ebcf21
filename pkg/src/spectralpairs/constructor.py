"""Combining a continuous exponential pair with a finite pair on Z_N^d.

Given a pair (Omega_1, Lambda_1) whose exponentials form a frame, Riesz
basis or orthogonal basis of L^2(Omega_1), and a finite pair (A, J) of
the matching kind on Z_N^d, the Minkowski sums

    Omega = Omega_1 + A,      Lambda = Lambda_1 + J/N

form a pair of the same kind on L^2(Omega), with frame constants equal
to the products of the input constants, provided the translated copies
of Omega_1 are disjoint and every e^{2 pi i lambda . a} equals 1.

Hypothesis failures are reported, not raised: a failing combination is a
first-class diagnostic object whose (still constructible) domain and
spectrum can be handed to the analytics module to exhibit the failure
numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .domains import (
    BoxDomain,
    Spectrum,
    minkowski_translate,
    root_of_unity_condition,
    shift_spectrum,
)
from .errors import (
    DimensionMismatchError,
    DuplicateSpectrumError,
    OverlapError,
    UnsupportedPairError,
)
from .finite_pairs import (
    FiniteClassification,
    FiniteSet,
    PairKind,
    Tolerances,
    classify_finite_pair,
)


@dataclass(frozen=True)
class ContinuousPair:
    """A domain, a spectrum, the claimed kind and its frame/Riesz constants."""

    domain: BoxDomain
    spectrum: Spectrum
    kind: PairKind
    lower: float
    upper: float

    def __post_init__(self):
        if self.domain.dimension != self.spectrum.dimension:
            raise DimensionMismatchError(
                "domain dimension %d != spectrum dimension %d"
                % (self.domain.dimension, self.spectrum.dimension)
            )
        if not (math.isnan(self.lower) or self.lower <= self.upper):
            raise ValueError("lower constant exceeds upper constant")
        if self.kind.at_least(PairKind.FRAME) and not self.lower > 0:
            raise ValueError("a %s pair needs a positive lower constant" % self.kind.value)

    @classmethod
    def orthogonal(cls, domain: BoxDomain, spectrum: Spectrum) -> "ContinuousPair":
        """Claim an orthogonal pair; with unnormalized exponentials the
        frame constants are both |Omega|."""
        measure = float(domain.measure)
        return cls(domain, spectrum, PairKind.ORTHOGONAL_BASIS, measure, measure)

    def to_json_dict(self) -> dict:
        return {
            "domain": self.domain.to_json_dict(),
            "spectrum": self.spectrum.to_json_dict(),
            "kind": self.kind.value,
            "lower": self.lower,
            "upper": self.upper,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ContinuousPair":
        return cls(
            BoxDomain.from_json_dict(data["domain"]),
            Spectrum.from_json_dict(data["spectrum"]),
            PairKind(data["kind"]),
            float(data["lower"]),
            float(data["upper"]),
        )


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True, eq=False)
class CombinedPairResult:
    """Outcome of a combination attempt.

    ``pair`` carries the combined kind when every hypothesis holds and
    kind ``none`` otherwise; it is omitted only when the domain or the
    spectrum itself cannot be built (overlapping translates, repeated
    shifts).  Predicted constants are the exact products of the input
    constants, NaN when the finite classification was unavailable.
    """

    pair: ContinuousPair | None
    predicted_lower: float
    predicted_upper: float
    checks: tuple[HypothesisCheck, ...]
    finite: FiniteClassification | None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def kind(self) -> PairKind:
        return self.pair.kind if self.pair is not None else PairKind.NONE

    def failed_checks(self) -> list[HypothesisCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json_dict(self) -> dict:
        return {
            "pair": None if self.pair is None else self.pair.to_json_dict(),
            "kind": self.kind.value,
            "predicted_lower": _json_float(self.predicted_lower),
            "predicted_upper": _json_float(self.predicted_upper),
            "hypotheses": [c.to_json_dict() for c in self.checks],
            "finite": None if self.finite is None else self.finite.to_json_dict(),
        }


def _json_float(x: float):
    return None if math.isnan(x) else x


_FINITE_REQUIREMENT = {
    PairKind.FRAME: PairKind.FRAME,
    PairKind.RIESZ_BASIS: PairKind.RIESZ_BASIS,
    PairKind.ORTHOGONAL_BASIS: PairKind.ORTHOGONAL_BASIS,
}


def _combine(
    base: ContinuousPair,
    a: FiniteSet,
    j: FiniteSet,
    target: PairKind,
    tolerances: Tolerances,
) -> CombinedPairResult:
    if base.domain.dimension != a.dimension:
        raise DimensionMismatchError(
            "base dimension %d != finite set dimension %d"
            % (base.domain.dimension, a.dimension)
        )
    checks: list[HypothesisCheck] = []

    checks.append(
        HypothesisCheck(
            "base-kind",
            base.kind.at_least(target),
            "base pair is %s, need at least %s" % (base.kind.value, target.value),
        )
    )

    if target == PairKind.FRAME:
        card_ok = len(j) >= len(a)
        card_msg = "#J = %d, #A = %d (need #J >= #A)" % (len(j), len(a))
    else:
        card_ok = len(j) == len(a)
        card_msg = "#J = %d, #A = %d (need #J = #A)" % (len(j), len(a))
    checks.append(HypothesisCheck("cardinality", card_ok, card_msg))

    domain = None
    try:
        domain = minkowski_translate(base.domain, a)
        checks.append(HypothesisCheck("disjoint-translates", True, "translated copies disjoint"))
    except OverlapError as exc:
        checks.append(HypothesisCheck("disjoint-translates", False, str(exc)))

    root_ok = root_of_unity_condition(base.spectrum, a)
    checks.append(
        HypothesisCheck(
            "root-of-unity",
            root_ok,
            "e^{2 pi i lambda.a} = 1 for all base spectrum points and a in A"
            if root_ok
            else "root-of-unity condition failed",
        )
    )

    finite = None
    if card_ok:
        finite = classify_finite_pair(a, j, tolerances)
        need = _FINITE_REQUIREMENT[target]
        checks.append(
            HypothesisCheck(
                "finite-kind",
                finite.kind.at_least(need),
                "finite pair is %s, need at least %s" % (finite.kind.value, need.value),
            )
        )
    else:
        checks.append(HypothesisCheck("finite-kind", False, "cardinality precondition failed"))

    spectrum = None
    try:
        spectrum = shift_spectrum(base.spectrum, j, j.modulus)
        checks.append(HypothesisCheck("distinct-shifts", True, "all shifts distinct mod lattice"))
    except DuplicateSpectrumError as exc:
        checks.append(HypothesisCheck("distinct-shifts", False, str(exc)))

    ok = all(c.passed for c in checks)
    if finite is not None:
        predicted_lower = base.lower * finite.lower
        predicted_upper = base.upper * finite.upper
    else:
        predicted_lower = predicted_upper = float("nan")

    pair = None
    if domain is not None and spectrum is not None:
        if ok:
            pair = ContinuousPair(domain, spectrum, target, predicted_lower, predicted_upper)
        else:
            pair = ContinuousPair(domain, spectrum, PairKind.NONE, 0.0, 0.0)
    return CombinedPairResult(pair, predicted_lower, predicted_upper, tuple(checks), finite)


def combine_frame(
    base: ContinuousPair,
    a: FiniteSet,
    j: FiniteSet,
    tolerances: Tolerances = Tolerances(),
) -> CombinedPairResult:
    """Frame + frame -> frame, constants (alpha c, beta C)."""
    return _combine(base, a, j, PairKind.FRAME, tolerances)


def combine_riesz(
    base: ContinuousPair,
    a: FiniteSet,
    j: FiniteSet,
    tolerances: Tolerances = Tolerances(),
) -> CombinedPairResult:
    """Riesz basis + invertible square finite pair -> Riesz basis."""
    return _combine(base, a, j, PairKind.RIESZ_BASIS, tolerances)


def combine_orthogonal(
    base: ContinuousPair,
    a: FiniteSet,
    j: FiniteSet,
    tolerances: Tolerances = Tolerances(),
) -> CombinedPairResult:
    """Orthogonal basis + orthogonal finite pair -> orthogonal basis."""
    return _combine(base, a, j, PairKind.ORTHOGONAL_BASIS, tolerances)


def cartesian_product(p1: ContinuousPair, p2: ContinuousPair) -> ContinuousPair:
    """Product of two orthogonal pairs: product domain, product spectrum."""
    for p in (p1, p2):
        if p.kind != PairKind.ORTHOGONAL_BASIS:
            raise UnsupportedPairError(
                "cartesian products are only taken of orthogonal pairs, got %s" % p.kind.value
            )
    d1, d2 = p1.domain.dimension, p2.domain.dimension
    boxes = tuple(
        (lo1 + lo2, hi1 + hi2)
        for (lo1, hi1) in p1.domain.boxes
        for (lo2, hi2) in p2.domain.boxes
    )
    domain = BoxDomain(d1 + d2, boxes)
    zero1 = tuple(Fraction(0) for _ in range(d1))
    zero2 = tuple(Fraction(0) for _ in range(d2))
    basis = tuple(g + zero2 for g in p1.spectrum.basis) + tuple(
        zero1 + g for g in p2.spectrum.basis
    )
    shifts = tuple(
        s1 + s2 for s1, s2 in itertools.product(p1.spectrum.shifts, p2.spectrum.shifts)
    )
    spectrum = Spectrum(d1 + d2, basis, shifts)
    return ContinuousPair.orthogonal(domain, spectrum)


@dataclass(frozen=True)
class CompletenessReport:
    checks: tuple[HypothesisCheck, ...]

    @property
    def applies(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"applies": self.applies, "checks": [c.to_json_dict() for c in self.checks]}


def check_completeness_hypotheses(
    base: ContinuousPair, a: FiniteSet, j: FiniteSet
) -> CompletenessReport:
    """Whether completeness of the base system transfers to the combined one.

    Needs disjoint translates, the root-of-unity condition, and a base
    system that is itself complete (any frame kind suffices).
    """
    checks = []
    try:
        minkowski_translate(base.domain, a)
        checks.append(HypothesisCheck("disjoint-translates", True))
    except OverlapError as exc:
        checks.append(HypothesisCheck("disjoint-translates", False, str(exc)))
    root_ok = root_of_unity_condition(base.spectrum, a)
    checks.append(
        HypothesisCheck(
            "root-of-unity", root_ok, "" if root_ok else "root-of-unity condition failed"
        )
    )
    checks.append(
        HypothesisCheck(
            "base-complete",
            base.kind.at_least(PairKind.FRAME),
            "base kind %s" % base.kind.value,
        )
    )
    return CompletenessReport(tuple(checks))


@dataclass(frozen=True)
class BesselBound:
    """Synthesis-side Bessel constants for the combined system.

    ``per_translate`` bounds the energy of any finite combination
    sum c e_lambda restricted to a single translated copy Omega_1 + a by
    (#J) C sum |c|^2, C the base Bessel constant; summing the copies
    gives the global bound ``coarse`` = #A #J |Omega_1| when C = |Omega_1|.
    The combination is a tight frame when #A = 1.
    """

    per_translate: float
    coarse: float
    tight_frame: bool
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "per_translate": self.per_translate,
            "coarse": self.coarse,
            "tight_frame": self.tight_frame,
            "note": self.note,
        }


def bessel_constant(base: ContinuousPair, a: FiniteSet, j: FiniteSet) -> BesselBound:
    """Guaranteed Bessel constants for exponentials on Omega_1 + A shifted by J/N."""
    if not base.upper > 0 or math.isnan(base.upper) or math.isinf(base.upper):
        raise UnsupportedPairError("base pair carries no finite Bessel bound")
    per_translate = base.upper * len(j)
    coarse = len(a) * len(j) * float(base.domain.measure)
    tight = len(a) == 1
    note = "tight frame: single translate, constant #J |Omega_1|" if tight else ""
    return BesselBound(per_translate, coarse, tight, note)
