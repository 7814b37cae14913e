"""The matroid of B: flats, flacets, and the Bergman fan.

The six rows of B define six lines in the projective plane; flats of the
matroid are the lines and their intersection points.  Flacets (flats whose
form-set and whose restriction are both connected) give the rays of the
Bergman fan, and maximal cones group the complete flags of flats.
"""

from collections import Counter

from coamoeba import Matroid, bergman_rays, complete_flags, maximal_cones
from coamoeba.catalog import sixline_b
from coamoeba.tropical import in_tropical, induced_matroid, weight, weight_to_flag

m = Matroid(sixline_b())
print(f"rank {m.rank}, {len(m.bases)} bases out of 20 triples")
dependent = sorted(
    sorted(m.labels_of(t)) for t in
    ({frozenset(c) for c in __import__('itertools').combinations(range(6), 3)} - m.bases)
)
print(f"dependent triples: {dependent}")

print("\nflats by corank (corank 1 = lines, corank 2 = points):")
for corank in (1, 2):
    flats = m.flats_of_corank(corank)
    sizes = Counter(len(f.forms) for f in flats)
    print(f"  corank {corank}: {len(flats)} flats, form-set sizes {dict(sizes)}")

print("\nflacets (both connectivity tests pass):")
for f in m.flacets():
    print(f"  {m.labels_of(f.forms)}")

print("\nweights and induced matroids:")
w = weight([1, 1, 0, 0, 0, 0])
ind = induced_matroid(m, w)
print(f"  weight e1+e2: loops {sorted(m.labels_of(ind.loops))} -> not in the tropical set")
w124 = weight([1, 1, 0, 1, 0, 0])
print(f"  weight e1+e2+e4: loopless = {in_tropical(m, w124)}")
flag = weight_to_flag(m, w124)
print(f"  induced flag of flats: {[m.labels_of(f.forms) for f in flag.flats]}")

print(f"\nBergman rays (flacet indicators): {len(bergman_rays(m))}")
cones = maximal_cones(m)
types = Counter(c.ray_coranks for c in cones)
print(f"maximal Bergman cones: {len(cones)} = {types[(1,1)]} spanned by two line rays")
print(f"                              + {types[(1,2)]} through a triple point")
print(f"complete flags in the fine subdivision: {len(complete_flags(m))}")
