"""Polyhedral 2D discriminant coamoebas and the d = 3 prism decomposition.

Everything planar lives in the universal cover of the torus, with
coordinates measured in units of pi (so all vertices of the cycles below are
exact integers or rationals).  A 2D discriminant coamoeba is encoded by
three polygons:

* the zonotope, the Minkowski sum of the segments [0, pi*f] over the merged
  generators f (which sum to zero, so it is centrally symmetric);
* the upper half-coamoeba: starting from the lexicographically largest
  vertex v of the zonotope, whose incoming counterclockwise edge is pi*f_1,
  walk v, v - pi*f_1, v - pi*(f_1+f_2), ... with f_2, ..., f_r ordered by
  the lines their generators span, taken clockwise from the line of f_1;
* the lower half-coamoeba, its reflection through the origin.

The closed coamoeba on the torus is the image of the two half-coamoebas; the
three cycles together cover exactly ``degree`` fundamental domains.  A prism
lifts a 2D cycle to a 3D phase-limit-set component through the quotient
chart of a hyperplane flat.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .configuration import VectorConfiguration
from .discriminant import essential_flacets, require_nondefective
from .errors import (
    DegenerateZonotope,
    DimensionNot3,
    NonIntegralDegree,
    NonSimplePolygon,
    NonzeroSum,
    ParallelRows,
)
from .matroid import Flat, Matroid, merge_parallel

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Polygon:
    """Closed simple polygon in the universal cover, coordinates in pi units."""

    vertices: tuple[Point, ...]

    def signed_area(self) -> Fraction:
        """Shoelace area in pi^2 units; positive means counterclockwise."""
        total = Fraction(0)
        pts = self.vertices
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
            total += x1 * y2 - x2 * y1
        return total / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def reflect(self) -> "Polygon":
        return Polygon(tuple((-x, -y) for x, y in self.vertices))

    def translate(self, dx: Fraction, dy: Fraction) -> "Polygon":
        return Polygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def is_simple(self) -> bool:
        edges = list(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))
        k = len(edges)
        for i in range(k):
            for j in range(i + 1, k):
                adjacent = j == i + 1 or (i == 0 and j == k - 1)
                if _segments_cross(edges[i], edges[j], allow_shared_end=adjacent):
                    return False
        return True

    def winding(self, point: Point) -> int:
        """Winding number of the boundary cycle around an off-boundary point."""
        x, y = Fraction(point[0]), Fraction(point[1])
        w = 0
        pts = self.vertices
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
            if y1 <= y:
                if y2 > y and _orient((x1, y1), (x2, y2), (x, y)) > 0:
                    w += 1
            elif y2 <= y and _orient((x1, y1), (x2, y2), (x, y)) < 0:
                w -= 1
        return w

    def contains(self, point: Point) -> bool:
        """Exact membership in the cycle support: boundary or nonzero winding.

        Winding semantics keeps self-intersecting shells meaningful; for a
        simple polygon this is ordinary closed membership.
        """
        x, y = Fraction(point[0]), Fraction(point[1])
        pts = self.vertices
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
            if _on_segment((x, y), ((x1, y1), (x2, y2))):
                return True
        return self.winding(point) != 0

    def float_vertices(self) -> list[tuple[float, float]]:
        return [(float(x), float(y)) for x, y in self.vertices]


def _orient(a: Point, b: Point, c: Point) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(p: Point, seg) -> bool:
    (a, b) = seg
    if _orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def _segments_cross(e1, e2, allow_shared_end: bool) -> bool:
    (a, b), (c, d) = e1, e2
    if allow_shared_end:
        shared = {a, b} & {c, d}
        if shared:
            # adjacent edges may only touch at the shared vertex
            return any(_on_segment(p, e2) for p in (a, b) if p not in shared) or any(
                _on_segment(p, e1) for p in (c, d) if p not in shared
            )
    d1, d2 = _orient(c, d, a), _orient(c, d, b)
    d3, d4 = _orient(a, b, c), _orient(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != d2 and d3 != d4:
        return True
    return any(
        _on_segment(p, e)
        for p, e in ((a, e2), (b, e2), (c, e1), (d, e1))
    )


# -- zonotope and half-coamoebas --------------------------------------------------


def _angle_key(v: la.IntVector):
    """Sort key equivalent to the angle of v in [0, 2*pi), exact."""
    x, y = v
    if y > 0 or (y == 0 and x > 0):
        half = 0  # angle in [0, pi)
    else:
        half = 1
    # within a half turn, compare by slope: a before b iff cross(a, b) > 0
    return (half, _SlopeKey(v))


class _SlopeKey:
    """Ascending angle within one half-turn: a < b iff cross(a, b) > 0."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        ax, ay = self.v
        bx, by = other.v
        return ax * by - ay * bx > 0

    def __eq__(self, other):
        ax, ay = self.v
        bx, by = other.v
        return ax * by - ay * bx == 0


class _DescSlopeKey(_SlopeKey):
    """Descending angle within one half-turn."""

    def __lt__(self, other):
        ax, ay = self.v
        bx, by = other.v
        return ax * by - ay * bx < 0


def _check_generators(gens) -> None:
    if len(gens) < 2:
        raise DegenerateZonotope("need at least two generators")
    if any(sum(col) for col in zip(*gens)):
        raise NonzeroSum("generators must sum to zero")
    for u, w in itertools.combinations(gens, 2):
        if u[0] * w[1] - u[1] * w[0] == 0:
            raise ParallelRows(f"parallel generators {u} and {w}; merge parallels first")


def zonotope(f: VectorConfiguration) -> Polygon:
    """Boundary of the Minkowski sum of [0, pi*b] over the rows, CCW.

    Requires nonzero pairwise non-parallel rows with zero sum; the result is
    centrally symmetric about the origin.
    """
    gens = [tuple(int(x) for x in row) for row in f.matrix]
    _check_generators(gens)
    edges = sorted([g for g in gens] + [tuple(-x for x in g) for g in gens], key=_angle_key)
    first = edges[0]
    # outward normal of the first edge; its support set gives the edge's tail
    normal = (first[1], -first[0])
    tail = [Fraction(0), Fraction(0)]
    for g in gens:
        if g[0] * normal[0] + g[1] * normal[1] > 0:
            tail[0] += g[0]
            tail[1] += g[1]
    verts = [tuple(tail)]
    cur = tail
    for e in edges[:-1]:
        cur = [cur[0] + e[0], cur[1] + e[1]]
        verts.append(tuple(cur))
    poly = Polygon(tuple((Fraction(x), Fraction(y)) for x, y in verts))
    if poly.signed_area() <= 0:
        raise DegenerateZonotope("zonotope has nonpositive area")
    return poly


def _line_key(v) -> tuple[int, int]:
    """Canonical upper-half direction of the line spanned by v."""
    x, y = int(v[0]), int(v[1])
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return (x, y)


def start_vertices(f: VectorConfiguration) -> list[tuple[Point, la.IntVector]]:
    """Vertices of the zonotope whose incoming CCW edge is a positive generator.

    These are the admissible start vertices for the half-coamoeba walk, one
    per generator.
    """
    z = zonotope(f)
    gens = [tuple(int(x) for x in row) for row in f.matrix]
    out = []
    k = len(z.vertices)
    for i, v in enumerate(z.vertices):
        prev = z.vertices[i - 1]
        incoming = (int(v[0] - prev[0]), int(v[1] - prev[1]))
        if incoming in gens:
            out.append((v, incoming))
    assert len(out) == len(gens)
    return out


def _clockwise_line_order(f1, rest):
    """Generators ordered by their lines, clockwise from the line of f1.

    For upper-half canonical directions with reference angle a and line
    angle b, the clockwise displacement (a - b) mod pi sorts the lines with
    b < a first and both groups by descending b; exact via cross products.
    """
    ref = _line_key(f1)

    def key(g):
        direction = _line_key(g)
        cross = ref[0] * direction[1] - ref[1] * direction[0]
        # lines below the reference angle come first; both groups in
        # descending line angle
        return (0 if cross < 0 else 1, _DescSlopeKey(direction))

    return sorted(rest, key=key)


def half_coamoeba_from_vertex(f: VectorConfiguration, v: Point, f1) -> Polygon:
    """The walk v, v - pi f_1, v - pi(f_1+f_2), ... for a given start vertex."""
    gens = [tuple(int(x) for x in row) for row in f.matrix]
    rest = [g for g in gens if g != tuple(f1)]
    ordered = [tuple(f1)] + _clockwise_line_order(f1, rest)
    verts = [v]
    cur = v
    for g in ordered[:-1]:
        cur = (cur[0] - g[0], cur[1] - g[1])
        verts.append(cur)
    plus = Polygon(tuple((Fraction(x), Fraction(y)) for x, y in verts))
    if plus.signed_area() < 0:
        plus = Polygon(tuple(reversed(plus.vertices)))
    return plus


def half_coamoeba_cycles(
    f: VectorConfiguration, strict: bool = False
) -> tuple[Polygon, Polygon]:
    """The upper half-coamoeba polygon and its reflection through the origin.

    The start vertex is the lexicographically largest admissible vertex (one
    whose incoming CCW edge is a positive generator); the walk subtracts
    pi*f_i in the clockwise-line order described in the module docstring.

    With five or more generators the shell can self-intersect; the boundary
    is still the correct cycle, and membership is by winding number.  Pass
    ``strict=True`` to raise NonSimplePolygon instead (never repaired).
    """
    v, f1 = max(start_vertices(f), key=lambda t: t[0])
    plus = half_coamoeba_from_vertex(f, v, f1)
    if strict and not plus.is_simple():
        raise NonSimplePolygon("half-coamoeba boundary self-intersects")
    return plus, plus.reflect()


@dataclass(frozen=True)
class CoamoebaCycle:
    """Zonotope plus the two half-coamoeba polygons, with the cycle degree.

    ``arg_shift_pi`` carries the argument shift (in pi units, componentwise
    0 or 1) accumulated when parallel generators were merged; membership
    queries add it before testing the polygons.  ``simple_boundary`` records
    whether the half-coamoeba shells are simple polygons; either way their
    supports are taken with winding-number semantics.
    """

    zonotope: Polygon
    plus: Polygon
    minus: Polygon
    degree: int
    arg_shift_pi: tuple[int, int]
    simple_boundary: bool


def degree_dH(z: Polygon, plus: Polygon, minus: Polygon) -> int:
    """(area(Z) + area(plus) + area(minus)) / (2 pi)^2, asserted integral >= 1.

    Areas are unsigned shoelace values, which count winding multiplicity on
    self-intersecting shells; that is what makes the quotient integral.
    """
    total = z.area() + plus.area() + minus.area()
    deg = total / 4
    if deg.denominator != 1 or deg < 1:
        raise NonIntegralDegree(f"cycle areas sum to {total} pi^2, not a multiple of 4")
    return int(deg)


def build_cycle(b2: VectorConfiguration, strict: bool = False) -> CoamoebaCycle:
    """Merge parallels, build the three polygons, and record degree and shift."""
    if any(b2.row_sum()):
        raise NonzeroSum("rows must sum to zero")
    reduced, merges = merge_parallel(b2)
    shift = [0, 0]
    for rec in merges:
        shift[0] ^= rec.arg_shift_pi[0]
        shift[1] ^= rec.arg_shift_pi[1]
    z = zonotope(reduced)
    plus, minus = half_coamoeba_cycles(reduced, strict=strict)
    return CoamoebaCycle(
        zonotope=z,
        plus=plus,
        minus=minus,
        degree=degree_dH(z, plus, minus),
        arg_shift_pi=(shift[0], shift[1]),
        simple_boundary=plus.is_simple(),
    )


# -- membership -------------------------------------------------------------------


def _translates(poly: Polygon, px: float, py: float, pad: float):
    xmin, xmax, ymin, ymax = (float(v) for v in poly.bbox())
    axs = range(math.ceil((xmin - px - pad) / 2), math.floor((xmax - px + pad) / 2) + 1)
    ays = range(math.ceil((ymin - py - pad) / 2), math.floor((ymax - py + pad) / 2) + 1)
    return itertools.product(axs, ays)


def _point_segment_dist(px, py, ax, ay, bx, by) -> float:
    vx, vy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    seg2 = vx * vx + vy * vy
    t = 0.0 if seg2 == 0 else max(0.0, min(1.0, (wx * vx + wy * vy) / seg2))
    dx, dy = px - (ax + t * vx), py - (ay + t * vy)
    return math.hypot(dx, dy)


def _poly_contains_float(verts, px, py) -> bool:
    w = 0
    k = len(verts)
    for i in range(k):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % k]
        if y1 <= py:
            if y2 > py and (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1) > 0:
                w += 1
        elif y2 <= py and (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1) < 0:
            w -= 1
    return w != 0


def _poly_dist_float(verts, px, py) -> float:
    if _poly_contains_float(verts, px, py):
        return 0.0
    k = len(verts)
    return min(
        _point_segment_dist(px, py, *verts[i], *verts[(i + 1) % k]) for i in range(k)
    )


def cycle_distance(cycle: CoamoebaCycle, theta, tol_window: float = 2.0) -> float:
    """Distance (radians) from an angle pair to the coamoeba cycle on the torus.

    Zero when the shifted point lies in some 2 pi Z^2 translate of either
    half-coamoeba polygon.
    """
    px = theta[0] / math.pi + cycle.arg_shift_pi[0]
    py = theta[1] / math.pi + cycle.arg_shift_pi[1]
    px -= 2 * math.floor((px + 1) / 2)
    py -= 2 * math.floor((py + 1) / 2)
    best = math.inf
    for poly in (cycle.plus, cycle.minus):
        verts = poly.float_vertices()
        for ax, ay in _translates(poly, px, py, tol_window):
            d = _poly_dist_float([(x - 2 * ax, y - 2 * ay) for x, y in verts], px, py)
            if d < best:
                best = d
                if best == 0.0:
                    return 0.0
    return best * math.pi


def contains2(cycle: CoamoebaCycle, theta, tol: float = 1e-9) -> bool:
    """Is the angle pair (radians) in the closed coamoeba, within tol?

    The query point is shifted by the recorded argument shift and tested
    against all relevant 2 pi Z^2 translates of the half-coamoeba polygons;
    the boundary counts as inside.
    """
    return cycle_distance(cycle, theta) <= tol


def contains2_exact(cycle: CoamoebaCycle, theta_pi) -> bool:
    """Exact membership for angles given as rational multiples of pi."""
    px = Fraction(theta_pi[0]) + cycle.arg_shift_pi[0]
    py = Fraction(theta_pi[1]) + cycle.arg_shift_pi[1]
    for poly in (cycle.plus, cycle.minus):
        xmin, xmax, ymin, ymax = poly.bbox()
        ax_lo = math.ceil((xmin - px) / 2)
        ax_hi = math.floor((xmax - px) / 2)
        ay_lo = math.ceil((ymin - py) / 2)
        ay_hi = math.floor((ymax - py) / 2)
        for ax in range(ax_lo, ax_hi + 1):
            for ay in range(ay_lo, ay_hi + 1):
                if poly.contains((px + 2 * ax, py + 2 * ay)):
                    return True
    return False


# -- prisms (d = 3) ----------------------------------------------------------------


@dataclass(frozen=True)
class Prism:
    """A 3D phase-limit-set component: the preimage of a 2D cycle.

    ``projection`` is the 2 x 3 quotient chart by the hyperplane's normal
    sublattice; membership of an angle triple is membership of its projected
    angle pair in ``base``.
    """

    hyperplane_flat: Flat
    projection: la.IntMatrix
    base: CoamoebaCycle


def prisms_d3(m: Matroid) -> list[Prism]:
    """One prism per essential flacet (hyperplane with nonzero form-sum)."""
    if m.config.d != 3:
        raise DimensionNot3("prism decomposition is implemented for d = 3 only")
    require_nondefective(m)
    prisms = []
    for flat in essential_flacets(m):
        restricted, proj = m.restrict_to_flat(flat)
        prisms.append(
            Prism(hyperplane_flat=flat, projection=proj, base=build_cycle(restricted))
        )
    return prisms


def _project_theta(prism: Prism, theta) -> tuple[float, float]:
    return tuple(
        sum(c * t for c, t in zip(row, theta)) for row in prism.projection
    )


def contains_pls3(prisms, theta, tol: float = 1e-9):
    """Membership of an angle triple in the union of prisms.

    Returns (found, witness) where witness is the first prism containing the
    point, or None.
    """
    for prism in prisms:
        if contains2(prism.base, _project_theta(prism, theta), tol):
            return True, prism
    return False, None


def pls3_distance(prisms, theta) -> float:
    """Distance (radians, in the projected 2D charts) to the nearest prism."""
    if not prisms:
        return math.inf
    return min(
        cycle_distance(prism.base, _project_theta(prism, theta)) for prism in prisms
    )
