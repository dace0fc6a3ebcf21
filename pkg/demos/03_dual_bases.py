"""Explicit biorthogonal duals for Riesz bases on unions of boxes.

For a square invertible evaluation matrix F the dual of
e_{lambda + j_s/N} is a piecewise multiple of itself: on the translate
Omega_1 + a_r it is scaled by c[r, s] = k (F^{-1})[r, s] omega^{a_r j_s}.
When F is unitary all multipliers are 1 and the basis is self-dual;
otherwise the duals genuinely differ and biorthogonality
<g_mu, e_nu> = |Omega| delta is certified by analytic integration.
"""

import numpy as np

from spectralpairs import (
    BoxDomain,
    DualBasis,
    FiniteSet,
    estimate_frame_bounds,
    integer_lattice,
    minkowski_translate,
    shift_spectrum,
    verify_biorthogonality,
)

base_dom = BoxDomain.interval(0, 1)
base_spec = integer_lattice(1)

for n in (4, 5):
    a = FiniteSet.from_ints(n, [0, 2])
    j = FiniteSet.from_ints(n, [0, 1])
    dual = DualBasis.build(base_dom, a, j)
    print("modulus", n)
    print("  dual values on A:\n", np.round(dual.finite_dual, 6))
    print("  piecewise multipliers:\n", np.round(dual.piece_coefficients, 6))
    print("  self-dual:", dual.is_self_dual)
    defect = verify_biorthogonality(base_dom, base_spec, a, j, 3)
    print("  biorthogonality defect within radius 3: %.2e" % defect)

# frame bounds of the mod-5 system estimated from growing truncations;
# they converge to the golden-ratio constants 2 -+ 2 cos(2 pi/5)
a5 = FiniteSet.from_ints(5, [0, 2])
j5 = FiniteSet.from_ints(5, [0, 1])
dom = minkowski_translate(base_dom, a5)
spec = shift_spectrum(base_spec, j5, 5)
print("\nmod-5 truncated bounds:")
for radius, (lo, hi) in zip((2, 4, 8), estimate_frame_bounds(dom, spec, [2, 4, 8])):
    print("  radius %d: (%.6f, %.6f)" % (radius, lo, hi))
