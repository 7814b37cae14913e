"""Gale duality: from a point configuration to its dual vector configuration.

A point configuration A is a list of integer points spanning Z^m and lying
on an affine hyperplane <u, x> = 1.  Its Gale dual B spans the integer
kernel of A; the rows of B sum to zero, and the geometry of the reduced
discriminant of A is read off from B.
"""

from coamoeba import check_gale_pair, gale_pair, validate_a
from coamoeba.catalog import hyperplane_a, sixline_a

print("== the six-point configuration in the plane ==")
a = sixline_a()
for label, col in zip(a.labels, zip(*a.matrix)):
    print(f"  {label}: {col}")

report = validate_a(a)
print(f"spans Z^3: {report.spans}")
print(f"affine covector u: {report.u}   (every point pairs to 1 with u)")
print(f"pyramid: {report.pyramid}")

pair = gale_pair(a)
print("\nGale dual B (rows):")
for label, row in zip(pair.b.labels, pair.b.matrix):
    print(f"  {label}: {row}")
print(f"rows sum to zero: {pair.b.row_sum()}")
print(f"exactness check A.B = 0, ranks complement: {check_gale_pair(pair)}")

print("\n== the all-ones configurations ==")
for d in (2, 3):
    p = gale_pair(hyperplane_a(d))
    print(f"d={d}: B rows = {p.b.matrix}")
    print(f"      (identity block over an all -1 row; the reduced discriminant")
    print(f"       is the hyperplane x_1 + ... + x_{d} + 1 = 0)")
