"""Building exponential bases for unions of intervals.

Start from the plain Fourier basis of [0,1) (the integer lattice) and
translate: domain [0,1) + {0, 2} = [0,1) u [2,3), spectrum Z + {0,1}/4 =
Z u Z + 1/4.  Because the finite pair ({0,2}, {0,1}) is orthogonal in
Z_4 and every e^{2 pi i n a} = 1, the result is an orthogonal basis of
the union, with frame constants 1 * 2 = 2 on both sides.
"""

from spectralpairs import (
    BoxDomain,
    ContinuousPair,
    FiniteSet,
    build_gram,
    cartesian_product,
    combine_orthogonal,
    integer_lattice,
    scaled_lattice,
)

base = ContinuousPair.orthogonal(BoxDomain.interval(0, 1), integer_lattice(1))
a = FiniteSet.from_ints(4, [0, 2])
j = FiniteSet.from_ints(4, [0, 1])

result = combine_orthogonal(base, a, j)
print("combined kind:", result.kind.value)
print("predicted constants:", result.predicted_lower, result.predicted_upper)
print("domain boxes:", [(str(lo[0]), str(hi[0])) for lo, hi in result.pair.domain.boxes])
print("spectrum shifts:", [str(s[0]) for s in result.pair.spectrum.shifts])

# certify orthogonality numerically: the Gram restricted to any
# truncation must be |Omega| I = 2 I
gram = build_gram(result.pair.domain, result.pair.spectrum, 5)
print("gram size:", len(gram), " max off-diagonal:", gram.max_offdiagonal())

# squaring the pair gives a two-dimensional orthogonal basis for the
# union of four unit squares
plane = cartesian_product(result.pair, result.pair)
print("\nplanar pair: dimension", plane.domain.dimension,
      "measure", plane.domain.measure, "shifts", len(plane.spectrum.shifts))

# the hypotheses matter: the same finite pair in Z_6 is orthogonal, but
# over the half-integer lattice the phase condition e^{2 pi i lam a} = 1
# fails and the combined system is NOT orthogonal
bad_base = ContinuousPair.orthogonal(BoxDomain.interval(0, 2), scaled_lattice(1, "1/2"))
bad = combine_orthogonal(bad_base, FiniteSet.from_ints(6, [0, 3]), FiniteSet.from_ints(6, [0, 1]))
print("\ncounterexample checks:", [(c.name, c.passed) for c in bad.checks])
diag_gram = build_gram(bad.pair.domain, bad.pair.spectrum, 4)
print("counterexample max off-diagonal:", round(diag_gram.max_offdiagonal(), 4), "(non-orthogonal)")
