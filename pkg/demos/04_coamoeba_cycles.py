"""2D discriminant coamoebas as polygonal cycles.

In the universal cover of the torus (coordinates in units of pi), a planar
discriminant coamoeba is encoded by the zonotope of its generators and two
half-coamoeba polygons: the upper one walks from a distinguished zonotope
vertex subtracting pi times each generator in clockwise-line order, and the
lower one is its reflection.  The three cycles together cover exactly
``degree`` fundamental domains.
"""

import math

from coamoeba import Matroid, build_cycle, contains2
from coamoeba.catalog import line_b, sixline_b
from coamoeba.serialize import pi_string

print("== the line x + y + 1 = 0 ==")
line = build_cycle(line_b())
print("zonotope vertices (pi units):", [tuple(map(int, v)) for v in line.zonotope.vertices])
print("upper half-coamoeba:", [tuple(map(int, v)) for v in line.plus.vertices])
print(f"areas: hexagon {line.zonotope.area()} pi^2, triangles "
      f"{line.plus.area()} pi^2 each; degree {line.degree}")
for theta, label in [
    ((math.pi / 2, -3 * math.pi / 4), "Arg of the point x = i on the line"),
    ((0.0, 0.0), "the origin (interior of the hexagon)"),
    ((math.pi, math.pi), "the hexagon vertex (pi, pi)"),
]:
    print(f"  contains {label}: {contains2(line, theta)}")

print("\n== restriction of the six-line configuration to ker b1 ==")
m = Matroid(sixline_b())
flat = m.closure({0})
restricted, proj = m.restrict_to_flat(flat)
print("B|_H rows:", restricted.matrix, " (quotient chart drops the first coordinate)")
fh = build_cycle(restricted)
print("merged generators produce the cycle:")
print("  zonotope area:", fh.zonotope.area(), "pi^2")
print("  half-coamoeba vertices:",
      [(pi_string(x), pi_string(y)) for x, y in fh.plus.vertices])
print("  degree d_H =", fh.degree, " (covers that many fundamental domains)")

print("\n== a five-generator restriction with a self-intersecting shell ==")
flat5 = m.closure({4})
restricted5, _ = m.restrict_to_flat(flat5)
five = build_cycle(restricted5)
print("generators:", restricted5.matrix)
print("shell is a simple polygon:", five.simple_boundary)
print("degree (areas weighted by winding):", five.degree)
print("membership still works through winding numbers, e.g. contains2 at (0.4, 2.8):",
      contains2(five, (0.4, 2.8)))
