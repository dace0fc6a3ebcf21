"""Classifying finite exponential pairs in Z_N.

The pair (A, J) in Z_N is scored by its evaluation matrix
F[s, r] = omega^{j_s a_r}, omega = e^{-2 pi i / N}: squared extreme
singular values are the frame constants; F^H F = #A I means the pair is
orthogonal; a merely invertible F gives a Riesz basis.
"""

import numpy as np

from spectralpairs import (
    FiniteSet,
    build_evaluation_matrix,
    classify_finite_pair,
    hadamard_report,
    symbol_of_set,
    transpose_pair,
)

# The size-2 unitary example: A = {0, 2}, J = {0, 1} in Z_4.
a = FiniteSet.from_ints(4, [0, 2])
j = FiniteSet.from_ints(4, [0, 1])

matrix = build_evaluation_matrix(a, j)
print("evaluation matrix:")
print(np.round(matrix.entries, 12))

result = classify_finite_pair(a, j)
print("kind:", result.kind.value)
print("frame constants:", result.lower, result.upper)
print("hadamard:", hadamard_report(a, j))

# basis kinds survive swapping the roles of A and J
ta, tj = transpose_pair(a, j)
print("transposed kind:", classify_finite_pair(ta, tj).kind.value)

# the same construction in Z_5 is invertible but no longer unitary;
# its constants are 2 -+ 2 cos(2 pi / 5), the golden ratio pair
a5 = FiniteSet.from_ints(5, [0, 2])
j5 = FiniteSet.from_ints(5, [0, 1])
r5 = classify_finite_pair(a5, j5)
print("\nmod-5 pair:", r5.kind.value, "constants", round(r5.lower, 6), round(r5.upper, 6))

# the symbol of J drives aliasing cancellation later: it vanishes
# exactly on the difference set of A when the pair is orthogonal
print("\nsymbol of J = {0,1} mod 4 at k = -3..3:")
for k in range(-3, 4):
    print("  k=%+d  chi_hat_J(k) = %s" % (k, np.round(symbol_of_set(j, k), 12)))
