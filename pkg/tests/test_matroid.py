"""Matroid structure: bases, flats, connectivity, flacets, merging."""

import itertools
import random
from fractions import Fraction

import pytest

from coamoeba.catalog import line_b, plane_b
from coamoeba.configuration import VectorConfiguration
from coamoeba.errors import NotSpanning, ZeroVector
from coamoeba.matroid import Matroid, connected_via_circuits, merge_parallel


def test_sixline_bases(m6):
    assert len(m6.bases) == 18
    dependent = {
        frozenset(c) for c in itertools.combinations(range(6), 3)
    } - m6.bases
    assert dependent == {frozenset({0, 1, 3}), frozenset({1, 2, 5})}


def test_identity_rows_single_basis():
    m = Matroid(VectorConfiguration.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert len(m.bases) == 1


def test_parallel_classes():
    m = Matroid(VectorConfiguration.from_rows([[1, 0], [2, 0], [0, 1]]))
    assert set(m.parallel_classes) == {frozenset({0, 1}), frozenset({2})}


def test_build_rejects_zero_row():
    with pytest.raises(ZeroVector):
        Matroid(VectorConfiguration.from_rows([[1, 0], [0, 0]]))


def test_build_rejects_nonspanning():
    with pytest.raises(NotSpanning):
        Matroid(VectorConfiguration.from_rows([[1, 0], [2, 0]]))


def test_closure_triple_point(m6):
    flat = m6.closure({0, 1})
    assert flat.forms == frozenset({0, 1, 3})


def test_closure_empty(m6):
    assert m6.closure(frozenset()).forms == frozenset()


def test_closure_double_point(m6):
    assert m6.closure({0, 2}).forms == frozenset({0, 2})


def test_closure_idempotent_monotone(m6):
    rng = random.Random(3)
    for _ in range(40):
        s = frozenset(rng.sample(range(6), rng.randint(0, 4)))
        t = s | frozenset(rng.sample(range(6), rng.randint(0, 2)))
        cs, ct = m6.closure(s), m6.closure(t)
        assert m6.closure(cs.forms).forms == cs.forms
        assert cs.forms <= ct.forms


def test_sixline_flats(m6):
    lines = m6.flats_of_corank(1)
    points = m6.flats_of_corank(2)
    assert len(lines) == 6
    assert len(points) == 11
    sizes = sorted(len(f.forms) for f in points)
    assert sizes == [2] * 9 + [3] * 2


def test_identity2_flats():
    m = Matroid(VectorConfiguration.from_rows([[1, 0], [0, 1]]))
    forms = {f.forms for f in m.flats()}
    assert forms == {frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})}


def test_line_flats(m_line):
    assert len(m_line.flats_of_corank(1)) == 3
    assert [f.forms for f in m_line.flats_of_corank(2)] == [frozenset({0, 1, 2})]


def test_connectivity():
    two = Matroid(VectorConfiguration.from_rows([[1, 0], [0, 1]]))
    assert not two.is_connected()
    one = Matroid(VectorConfiguration.from_rows([[2]]))
    assert one.is_connected()


def test_sixline_connected(m6):
    assert m6.is_connected()


def _random_spanning_config(rng, n, d):
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(n)]
        if any(not any(r) for r in rows):
            continue
        try:
            return VectorConfiguration.from_rows(rows)
        except Exception:
            continue


def test_connectivity_matches_circuit_oracle(m6, m_line, m_plane):
    rng = random.Random(77)
    configs = [m6.config, m_line.config, m_plane.config]
    while len(configs) < 18:
        n = rng.randint(1, 8)
        d = rng.randint(1, min(3, n))
        cfg = _random_spanning_config(rng, n, d)
        try:
            Matroid(cfg)
        except NotSpanning:
            continue
        configs.append(cfg)
    for cfg in configs:
        assert Matroid(cfg).is_connected() == connected_via_circuits(cfg)


def test_sixline_flacets(m6):
    flacets = {f.forms for f in m6.flacets()}
    expected = {frozenset({i}) for i in range(6)} | {
        frozenset({0, 1, 3}),
        frozenset({1, 2, 5}),
    }
    assert flacets == expected
    assert frozenset({0, 2}) not in flacets  # a double point is never a flacet


def test_line_flacets(m_line):
    assert {f.forms for f in m_line.flacets()} == {
        frozenset({0}),
        frozenset({1}),
        frozenset({2}),
    }


def test_restrict_to_hyperplane(m6):
    flat = m6.closure({0})
    restricted, proj = m6.restrict_to_flat(flat)
    assert proj == ((0, 1, 0), (0, 0, 1))
    assert restricted.matrix == ((1, 0), (0, 1), (2, 0), (-1, -2), (-2, 1))
    assert restricted.labels == ("b2", "b3", "b4", "b5", "b6")
    assert not any(restricted.row_sum())


def test_restrict_plane_example(m_plane):
    flat = m_plane.closure({2})
    restricted, _ = m_plane.restrict_to_flat(flat)
    assert restricted.matrix == ((1, 0), (0, 1), (-1, -1))


def test_restrict_annihilates_span(m6):
    for flat in m6.proper_flats():
        _, proj = m6.restrict_to_flat(flat)
        for i in flat.forms:
            assert all(
                sum(p * x for p, x in zip(row, m6.config.matrix[i])) == 0
                for row in proj
            )


def test_contract_triple_point(m6):
    flat = m6.closure({0, 1, 3})
    contracted = m6.contract_flat(flat)
    assert contracted.labels == ("b1", "b2", "b4")
    assert contracted.d == 2
    sub = Matroid(contracted)
    assert sub.rank == 2 and len(sub.bases) == 3


def test_contract_hyperplane(m6):
    flat = m6.closure({0})
    contracted = m6.contract_flat(flat)
    assert contracted.labels == ("b1",)
    assert contracted.d == 1


def test_contract_other_triple_point(m6):
    flat = m6.closure({1, 2, 5})
    assert m6.contract_flat(flat).labels == ("b2", "b3", "b6")


def test_merge_parallel_sum():
    cfg = VectorConfiguration.from_rows([[1, 0], [2, 0], [0, 1], [-3, -1]])
    reduced, merges = merge_parallel(cfg)
    assert reduced.matrix == ((3, 0), (0, 1), (-3, -1))
    assert len(merges) == 1
    rec = merges[0]
    assert rec.constant == Fraction(4, 27)
    assert rec.arg_shift_pi == (0, 0)
    assert not rec.removed


def test_merge_parallel_cancelling_class():
    cfg2 = VectorConfiguration.from_rows([[1, 1], [-1, -1], [2, 0], [-2, 0]])
    reduced2, merges2 = merge_parallel(cfg2)
    assert reduced2.matrix == ()
    pair = next(m for m in merges2 if m.labels == ("b1", "b2"))
    assert pair.removed
    assert pair.constant == Fraction(-1)
    assert pair.arg_shift_pi == (1, 1)
    even = next(m for m in merges2 if m.labels == ("b3", "b4"))
    # eta = (1, 0), q = (2, -2): constant 2^2 * (-2)^(-2) = 1 > 0
    assert even.constant == Fraction(1) and even.arg_shift_pi == (0, 0)


def test_merge_parallel_no_parallels(b6):
    reduced, merges = merge_parallel(b6)
    assert reduced.matrix == b6.matrix
    assert merges == ()


def test_merge_parallel_preserves_row_sum():
    rng = random.Random(123)
    for _ in range(30):
        n, d = rng.randint(1, 7), rng.randint(1, 3)
        rows = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(n)]
        rows = [r for r in rows if any(r)]
        if not rows:
            continue
        cfg = VectorConfiguration.from_rows(rows)
        reduced, _ = merge_parallel(cfg)
        assert reduced.row_sum() == cfg.row_sum()
