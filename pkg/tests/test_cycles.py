"""Zonotopes, half-coamoeba cycles, membership, and prisms."""

import itertools
import math
import random
from fractions import Fraction

import pytest

from coamoeba.catalog import line_b, plane_b
from coamoeba.configuration import VectorConfiguration
from coamoeba.cycles import (
    Polygon,
    build_cycle,
    contains2,
    contains2_exact,
    contains_pls3,
    cycle_distance,
    degree_dH,
    half_coamoeba_cycles,
    half_coamoeba_from_vertex,
    prisms_d3,
    start_vertices,
    zonotope,
)
from coamoeba.errors import (
    Defective,
    DegenerateZonotope,
    DimensionNot3,
    NonzeroSum,
    ParallelRows,
)
from coamoeba.matroid import Matroid, merge_parallel


def shoelace(vertices):
    """Independent signed-area oracle."""
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:] + vertices[:1]):
        total += Fraction(x1) * Fraction(y2) - Fraction(x2) * Fraction(y1)
    return total / 2


def pair_det_area(gens):
    """Independent zonotope-area oracle: sum of |det| over generator pairs."""
    total = 0
    for u, w in itertools.combinations(gens, 2):
        total += abs(u[0] * w[1] - u[1] * w[0])
    return total


FH = VectorConfiguration.from_rows([[3, 0], [0, 1], [-1, -2], [-2, 1]])


def test_line_zonotope():
    z = zonotope(line_b())
    assert set(z.vertices) == {
        (1, 0),
        (1, 1),
        (0, 1),
        (-1, 0),
        (-1, -1),
        (0, -1),
    }
    assert z.area() == 3
    assert z.area() == pair_det_area(line_b().matrix)
    assert z.signed_area() == shoelace(list(z.vertices))


def test_fh_zonotope_area():
    z = zonotope(FH)
    assert z.area() == 20
    assert pair_det_area(FH.matrix) == 20


def test_zonotope_rejects_parallel_generators():
    with pytest.raises(ParallelRows):
        zonotope(VectorConfiguration.from_rows([[1, 0], [2, 0], [-3, 0]]))
    with pytest.raises(ParallelRows):
        zonotope(VectorConfiguration.from_rows([[1, 1], [-1, -1]]))


def test_zonotope_rejects_nonzero_sum():
    with pytest.raises(NonzeroSum):
        zonotope(VectorConfiguration.from_rows([[1, 0], [0, 1]]))


def test_zonotope_rejects_too_few_generators():
    with pytest.raises(DegenerateZonotope):
        zonotope(VectorConfiguration((), ()))


def test_line_half_cycles():
    plus, minus = half_coamoeba_cycles(line_b())
    assert list(plus.vertices) == [(1, 1), (1, 0), (2, 1)]
    assert plus.area() == Fraction(1, 2)
    assert minus.vertices == tuple((-x, -y) for x, y in plus.vertices)
    assert abs(shoelace(list(plus.vertices))) == Fraction(1, 2)


def test_fh_half_cycles():
    plus, minus = half_coamoeba_cycles(FH)
    assert list(plus.vertices) == [(3, 1), (3, 0), (4, 2), (1, 2)]
    assert plus.area() == 2
    assert minus.vertices == tuple((-x, -y) for x, y in plus.vertices)


def test_degrees():
    line = build_cycle(line_b())
    assert line.degree == 1
    fh = build_cycle(FH)
    assert fh.degree == 6
    plane_restriction = build_cycle(
        VectorConfiguration.from_rows([[1, 0], [0, 1], [-1, -1]])
    )
    assert plane_restriction.degree == 1


def test_degree_formula():
    fh = build_cycle(FH)
    assert degree_dH(fh.zonotope, fh.plus, fh.minus) == 6
    total = fh.zonotope.area() + fh.plus.area() + fh.minus.area()
    assert total == 24


def test_line_membership_examples():
    cyc = build_cycle(line_b())
    assert contains2(cyc, (math.pi / 2, -3 * math.pi / 4))
    assert not contains2(cyc, (0.0, 0.0))
    assert contains2(cyc, (math.pi, math.pi))
    assert contains2_exact(cyc, (Fraction(1), Fraction(1)))
    assert contains2_exact(cyc, (Fraction(1, 2), Fraction(-3, 4)))
    assert not contains2_exact(cyc, (Fraction(0), Fraction(0)))


def test_membership_tolerance_band():
    cyc = build_cycle(line_b())
    # just inside the hexagon near its x = pi edge: outside the coamoeba by ~2e-3
    theta = (math.pi - 2e-3, math.pi / 2)
    d = cycle_distance(cyc, theta)
    assert 0 < d < 3e-3
    assert not contains2(cyc, theta, tol=1e-9)
    assert contains2(cyc, theta, tol=5e-3)


def test_choice_of_start_vertex_is_immaterial():
    rng = random.Random(2024)
    configs = [line_b(), FH]
    # a five-generator configuration whose shell self-intersects
    five = VectorConfiguration.from_rows(
        [[1, 0], [0, 2], [-1, -1], [1, 4], [-1, -5]]
    )
    configs.append(five)
    for cfg in configs:
        reduced, _ = merge_parallel(cfg)
        variants = []
        for v, f1 in start_vertices(reduced):
            poly = half_coamoeba_from_vertex(reduced, v, f1)
            variants.append((poly, poly.reflect()))
        base_plus, base_minus = variants[0]
        for _ in range(250):
            theta = (rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi))
            answers = set()
            for plus, minus in variants:
                cyc = build_cycle(cfg)
                cyc = type(cyc)(
                    zonotope=cyc.zonotope,
                    plus=plus,
                    minus=minus,
                    degree=cyc.degree,
                    arg_shift_pi=cyc.arg_shift_pi,
                    simple_boundary=plus.is_simple(),
                )
                answers.add(contains2(cyc, theta, tol=1e-9))
            assert len(answers) == 1


def test_five_generator_shell():
    five = VectorConfiguration.from_rows([[1, 0], [0, 2], [-1, -1], [1, 4], [-1, -5]])
    cyc = build_cycle(five)
    assert not cyc.simple_boundary
    assert cyc.zonotope.area() == 26
    assert cyc.plus.area() == 1
    assert cyc.degree == 7
    from coamoeba.errors import NonSimplePolygon

    with pytest.raises(NonSimplePolygon):
        build_cycle(five, strict=True)


def test_five_generator_membership_against_sampled_coamoeba():
    # every point of the parameterized curve must land inside the cycle
    import numpy as np

    five = VectorConfiguration.from_rows([[1, 0], [0, 2], [-1, -1], [1, 4], [-1, -5]])
    cyc = build_cycle(five)
    fm = np.array(five.matrix, dtype=float)
    rng = np.random.default_rng(6)
    y = rng.standard_normal((400, 2)) + 1j * rng.standard_normal((400, 2))
    pair = y @ fm.T
    keep = np.all(np.abs(pair) > 1e-6, axis=1)
    pair = pair[keep]
    psi = np.stack(
        [np.prod(pair ** fm[:, j], axis=1) for j in range(2)], axis=1
    )
    for theta in np.angle(psi):
        assert contains2(cyc, theta, tol=1e-7)


def test_arg_shift_enters_membership(m6):
    # the ker-b3 restriction merges a mixed-sign class with negative constant,
    # so its cycle carries a genuine argument shift; sampled curve points
    # must still land inside
    import numpy as np

    flat = m6.closure({2})
    restricted, _ = m6.restrict_to_flat(flat)
    cyc = build_cycle(restricted)
    assert cyc.arg_shift_pi != (0, 0)
    fm = np.array(restricted.matrix, dtype=float)
    rng = np.random.default_rng(12)
    y = rng.standard_normal((300, 2)) + 1j * rng.standard_normal((300, 2))
    pair = y @ fm.T
    keep = np.all(np.abs(pair) > 1e-6, axis=1)
    psi = np.stack(
        [np.prod(pair[keep] ** fm[:, j], axis=1) for j in range(2)], axis=1
    )
    hits = 0
    for theta in np.angle(psi):
        assert contains2(cyc, theta, tol=1e-7)
        hits += 1
    assert hits > 200
    # with the shift suppressed, membership must fail somewhere
    stripped = type(cyc)(
        zonotope=cyc.zonotope,
        plus=cyc.plus,
        minus=cyc.minus,
        degree=cyc.degree,
        arg_shift_pi=(0, 0),
        simple_boundary=cyc.simple_boundary,
    )
    misses = sum(
        0 if contains2(stripped, theta, tol=1e-7) else 1 for theta in np.angle(psi)
    )
    assert misses > 0


def test_build_cycle_requires_zero_sum():
    with pytest.raises(NonzeroSum):
        build_cycle(VectorConfiguration.from_rows([[1, 0], [0, 1]]))


def test_prisms_sixline(m6):
    prisms = prisms_d3(m6)
    assert len(prisms) == 6
    degrees = {
        tuple(sorted(m6.labels_of(p.hyperplane_flat.forms))): p.base.degree
        for p in prisms
    }
    assert degrees[("b1",)] == 6


def test_prisms_plane(m_plane):
    prisms = prisms_d3(m_plane)
    assert len(prisms) == 4
    assert all(p.base.degree == 1 for p in prisms)


def test_prisms_require_d3(m_line):
    with pytest.raises(DimensionNot3):
        prisms_d3(m_line)


def test_prisms_require_nondefective():
    cfg = VectorConfiguration.from_rows(
        [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]
    )
    with pytest.raises(Defective):
        prisms_d3(Matroid(cfg))


def test_contains_pls3_plane(m_plane):
    prisms = prisms_d3(m_plane)
    rng = random.Random(9)
    for _ in range(10):
        theta3 = rng.uniform(-math.pi, math.pi)
        inside, witness = contains_pls3(prisms, (math.pi / 2, -3 * math.pi / 4, theta3))
        assert inside
        assert witness is not None
    # the origin is the zonotope center, interior to the complement of the
    # closed coamoeba, so no prism contains it
    inside, witness = contains_pls3(prisms, (0.0, 0.0, 0.0))
    assert not inside and witness is None


def test_contains_pls3_empty():
    assert contains_pls3([], (0.0, 0.0, 0.0)) == (False, None)


def test_polygon_simple_checks():
    square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    assert square.is_simple()
    bow = Polygon(((0, 0), (1, 1), (1, 0), (0, 1)))
    assert not bow.is_simple()
