"""Finite exponential pairs on Z_N^d.

A pair of subsets (A, J) of Z_N^d is classified through its evaluation
matrix F with entries F[s, r] = omega^(j_s . a_r), omega = e^{-2 pi i/N}:
rows are indexed by J, columns by A, so F maps coefficient vectors on A
to inner products against the exponentials E_j.  Under counting measure
the squared extreme singular values of F are the frame constants, and
(A, J) is an orthogonal pair exactly when F^H F = (#A) I.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from ._exact import cis, omega_power
from .errors import (
    DimensionMismatchError,
    InsufficientSpectrumError,
    SymmetryUndefinedError,
)


class PairKind(str, Enum):
    NONE = "none"
    BESSEL = "bessel"
    FRAME = "frame"
    RIESZ_BASIS = "riesz-basis"
    ORTHOGONAL_BASIS = "orthogonal-basis"

    @property
    def rank(self) -> int:
        return _KIND_RANK[self]

    def at_least(self, other: "PairKind") -> bool:
        return self.rank >= other.rank


_KIND_RANK = {
    PairKind.NONE: 0,
    PairKind.BESSEL: 1,
    PairKind.FRAME: 2,
    PairKind.RIESZ_BASIS: 3,
    PairKind.ORTHOGONAL_BASIS: 4,
}


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds for classification decisions.

    Entries of the evaluation matrix are exact roots of unity, so the
    unitarity defect is pure floating evaluation; 1e-10 is generous.
    """

    unitary: float = 1e-10
    condition_cap: float = 1e12
    frame_lower: float = 1e-10


@dataclass(frozen=True)
class FiniteSet:
    """An ordered subset of Z_N^d with exact integer coordinates."""

    modulus: int
    dimension: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        if self.dimension < 1:
            raise ValueError("dimension must be a positive integer")
        reduced = []
        for p in self.points:
            if isinstance(p, int):
                p = (p,)
            p = tuple(int(c) % self.modulus for c in p)
            if len(p) != self.dimension:
                raise DimensionMismatchError(
                    "point %r does not have dimension %d" % (p, self.dimension)
                )
            reduced.append(p)
        if len(set(reduced)) != len(reduced):
            raise ValueError("points are not distinct mod %d: %r" % (self.modulus, reduced))
        object.__setattr__(self, "points", tuple(reduced))

    @classmethod
    def from_ints(cls, modulus: int, values) -> "FiniteSet":
        """One-dimensional constructor from plain integers."""
        return cls(modulus, 1, tuple((int(v),) for v in values))

    def __len__(self) -> int:
        return len(self.points)

    def translate(self, t) -> "FiniteSet":
        t = (t,) if isinstance(t, int) else tuple(t)
        pts = tuple(tuple((c + dt) % self.modulus for c, dt in zip(p, t)) for p in self.points)
        return FiniteSet(self.modulus, self.dimension, pts)

    def to_json_dict(self) -> dict:
        return {"N": self.modulus, "d": self.dimension, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteSet":
        return cls(int(data["N"]), int(data["d"]), tuple(tuple(p) for p in data["points"]))


@dataclass(frozen=True, eq=False)
class EvaluationMatrix:
    """The (#J x #A) matrix [omega^{j.a}] together with its row/column labels."""

    entries: np.ndarray
    omega: complex
    row_index: tuple[tuple[int, ...], ...]  # points of J
    col_index: tuple[tuple[int, ...], ...]  # points of A

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape


@dataclass(frozen=True)
class FiniteClassification:
    kind: PairKind
    lower: float
    upper: float
    condition_number: float

    def to_json_dict(self) -> dict:
        cond = self.condition_number
        return {
            "kind": self.kind.value,
            "lower": self.lower,
            "upper": self.upper,
            "condition": None if cond == float("inf") else cond,
        }


def _require_compatible(a: FiniteSet, j: FiniteSet) -> None:
    if a.modulus != j.modulus:
        raise DimensionMismatchError(
            "moduli differ: %d vs %d" % (a.modulus, j.modulus)
        )
    if a.dimension != j.dimension:
        raise DimensionMismatchError(
            "dimensions differ: %d vs %d" % (a.dimension, j.dimension)
        )


def build_evaluation_matrix(a: FiniteSet, j: FiniteSet) -> EvaluationMatrix:
    """Evaluation matrix with rows indexed by J and columns by A."""
    _require_compatible(a, j)
    n = a.modulus
    entries = np.empty((len(j), len(a)), dtype=complex)
    for s, jp in enumerate(j.points):
        for r, ap in enumerate(a.points):
            exponent = sum(jc * ac for jc, ac in zip(jp, ap))
            entries[s, r] = omega_power(exponent, n)
    return EvaluationMatrix(entries, omega_power(1, n), j.points, a.points)


def classify_finite_pair(
    a: FiniteSet, j: FiniteSet, tolerances: Tolerances = Tolerances()
) -> FiniteClassification:
    """Classify (A, J) from the singular values of the evaluation matrix.

    Requires #J >= #A; square pairs may be Riesz or orthogonal bases,
    rectangular ones at most frames.  Constants are squared extreme
    singular values under counting measure.
    """
    _require_compatible(a, j)
    if len(j) < len(a):
        raise InsufficientSpectrumError(
            "#J = %d < #A = %d: no frame classification" % (len(j), len(a))
        )
    matrix = build_evaluation_matrix(a, j)
    f = matrix.entries
    k = len(a)
    sigma = np.linalg.svd(f, compute_uv=False)
    lower = float(sigma[-1] ** 2)
    upper = float(sigma[0] ** 2)
    condition = float(sigma[0] / sigma[-1]) if sigma[-1] > 0 else float("inf")

    square = len(a) == len(j)
    gram_defect = np.abs(f.conj().T @ f - k * np.eye(k)).max()
    if square and gram_defect < tolerances.unitary:
        kind = PairKind.ORTHOGONAL_BASIS
    elif square and condition < tolerances.condition_cap:
        kind = PairKind.RIESZ_BASIS
    elif lower > tolerances.frame_lower:
        kind = PairKind.FRAME
    else:
        kind = PairKind.NONE
    return FiniteClassification(kind, lower, upper, condition)


def check_mutual_orthogonality(a: FiniteSet, j: FiniteSet, tolerance: float = 1e-10) -> bool:
    """True iff sum_{a in A} e^{2 pi i (j - j').a / N} vanishes for all j != j'."""
    _require_compatible(a, j)
    n = a.modulus
    for s, jp in enumerate(j.points):
        for jq in j.points[s + 1:]:
            total = 0j
            for ap in a.points:
                exponent = sum((jc - qc) * ac for jc, qc, ac in zip(jp, jq, ap))
                total += cis(Fraction(exponent % n, n))
            if abs(total) >= tolerance:
                return False
    return True


def transpose_pair(
    a: FiniteSet, j: FiniteSet, tolerances: Tolerances = Tolerances()
) -> tuple[FiniteSet, FiniteSet]:
    """Swap the roles of A and J; defined only for basis kinds.

    Transposing the evaluation matrix preserves invertibility and
    unitarity, so (J, A) has the same basis kind as (A, J).  For a
    rectangular frame (#J > #A) no symmetry is claimed.
    """
    if len(j) != len(a):
        raise SymmetryUndefinedError(
            "transposition undefined for #J = %d != #A = %d" % (len(j), len(a))
        )
    kind = classify_finite_pair(a, j, tolerances).kind
    if kind.rank < PairKind.RIESZ_BASIS.rank:
        raise SymmetryUndefinedError("pair is not a Riesz or orthogonal basis: %s" % kind.value)
    return j, a


def symbol_of_set(j: FiniteSet, k) -> complex:
    """The symbol of J at integer argument k: sum_{j in J} e^{-2 pi i j.k / N}."""
    k = (k,) if isinstance(k, int) else tuple(int(c) for c in k)
    if len(k) != j.dimension:
        raise DimensionMismatchError("argument %r does not have dimension %d" % (k, j.dimension))
    n = j.modulus
    total = 0j
    for jp in j.points:
        exponent = sum(jc * kc for jc, kc in zip(jp, k))
        total += omega_power(exponent, n)
    return total
