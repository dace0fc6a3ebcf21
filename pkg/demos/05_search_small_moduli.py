"""Exhaustive search for orthogonal and Riesz pairs at small moduli.

Translating A or J only multiplies the evaluation matrix by unimodular
diagonals, so the search normally visits one representative per
translation orbit (subsets containing 0, lexicographically minimal).
Z_3 admits no orthogonal pair of size 2; Z_4 does, Z_8 has more.
"""

from spectralpairs import PairKind, SearchQuery, enumerate_pairs

for n in (3, 4, 5, 6, 8):
    result = enumerate_pairs(SearchQuery(n, 1, 2, PairKind.ORTHOGONAL_BASIS))
    pairs = [
        (tuple(p[0] for p in m.a.points), tuple(p[0] for p in m.j.points))
        for m in result.matches
    ]
    print("Z_%d size-2 orthogonal pairs (canonical):" % n, pairs or "none")

# Riesz pairs are generic; orthogonal ones are rare
riesz = enumerate_pairs(SearchQuery(8, 1, 2, PairKind.RIESZ_BASIS))
orth = enumerate_pairs(SearchQuery(8, 1, 2, PairKind.ORTHOGONAL_BASIS))
print("\nZ_8: %d Riesz pairs, %d orthogonal, %d pairs examined"
      % (len(riesz.matches), len(orth.matches), riesz.examined))

# without deduplication the full orbit shows up
full = enumerate_pairs(SearchQuery(4, 1, 2, dedup_translates=False))
print("Z_4 without dedup: %d orthogonal pairs (orbit of the canonical 2)" % len(full.matches))

# groups over 16 elements switch to seeded sampling; the seed is recorded
sampled = enumerate_pairs(SearchQuery(17, 1, 2, PairKind.RIESZ_BASIS, seed=7, samples=200))
print("Z_17 sampled: %d Riesz pairs from %d samples (seed %s)"
      % (len(sampled.matches), sampled.examined, sampled.seed))
