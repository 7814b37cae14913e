"""Exact integer and rational lattice linear algebra.

Matrices are immutable tuples of tuples (row-major).  Integer matrices hold
Python ints (arbitrary precision); rational elimination uses
``fractions.Fraction``.  Nothing here ever rounds.

Conventions fixed once so that every downstream coordinate choice is
reproducible:

* Hermite normal form is row-style upper echelon with positive pivots and
  the entries above each pivot reduced into ``[0, pivot)``.  This form is
  unique for a given row lattice, which is what makes golden tests possible.
* ``integer_kernel`` returns the HNF-canonical basis of the saturated kernel
  lattice.
* ``quotient_projection`` by a saturated sublattice S of Z^r pairs with the
  canonical basis of the orthogonal kernel {v : <v, s> = 0 for all s in S};
  it kills exactly S and is surjective onto Z^(r-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotSaturated

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def as_matrix(rows) -> IntMatrix:
    """Freeze an iterable of rows into a rectangular tuple-of-tuples."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m) -> tuple[tuple, ...]:
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    """Exact matrix product; works for int or Fraction entries."""
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v: IntVector) -> IntVector:
    """Divide out the gcd, keeping orientation.  Zero vector stays zero."""
    g = vec_gcd(v)
    return tuple(x // g for x in v) if g else tuple(v)


def rank_rational(m) -> int:
    """Rank over Q by exact fraction-valued Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in m]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with g = gcd(a,b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF.  Returns (h, u) with u unimodular and u @ m = h.

    h is upper echelon with positive pivots; entries above each pivot are
    reduced into [0, pivot); zero rows sink to the bottom.
    """
    m = as_matrix(m)
    k = len(m)
    rows = [list(r) for r in m]
    u = [list(r) for r in identity(k)]
    ncols = len(rows[0]) if rows else 0
    pr = 0
    for col in range(ncols):
        piv = next((i for i in range(pr, k) if rows[i][col]), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        u[pr], u[piv] = u[piv], u[pr]
        for i in range(pr + 1, k):
            if not rows[i][col]:
                continue
            a, b = rows[pr][col], rows[i][col]
            g, x, y = _ext_gcd(a, b)
            p, q = -(b // g), a // g  # det [[x,y],[p,q]] = 1
            rows[pr], rows[i] = (
                [x * s + y * t for s, t in zip(rows[pr], rows[i])],
                [p * s + q * t for s, t in zip(rows[pr], rows[i])],
            )
            u[pr], u[i] = (
                [x * s + y * t for s, t in zip(u[pr], u[i])],
                [p * s + q * t for s, t in zip(u[pr], u[i])],
            )
        if rows[pr][col] < 0:
            rows[pr] = [-x for x in rows[pr]]
            u[pr] = [-x for x in u[pr]]
        pivot = rows[pr][col]
        for i in range(pr):
            q = rows[i][col] // pivot  # floor division puts entry in [0, pivot)
            if q:
                rows[i] = [s - q * t for s, t in zip(rows[i], rows[pr])]
                u[i] = [s - q * t for s, t in zip(u[i], u[pr])]
        pr += 1
    return as_matrix(rows), as_matrix(u)


def row_lattice_basis(m) -> IntMatrix:
    """HNF-canonical basis of the lattice spanned by the rows (no zero rows)."""
    h, _ = hermite_normal_form(as_matrix(m))
    return tuple(r for r in h if any(r))


def lattices_equal(a, b) -> bool:
    """Do two row sets span the same sublattice?"""
    return row_lattice_basis(a) == row_lattice_basis(b)


@dataclass(frozen=True)
class LatticeBasis:
    """A basis of a sublattice of Z^ambient_rank.

    ``saturated`` asserts the spanned subgroup equals its saturation (the
    intersection of its rational span with the ambient lattice).
    """

    ambient_rank: int
    vectors: tuple[IntVector, ...]
    saturated: bool

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def primitive_flags(self) -> tuple[bool, ...]:
        return tuple(vec_gcd(v) == 1 for v in self.vectors)

    def matrix(self) -> IntMatrix:
        return as_matrix(self.vectors)


def integer_kernel(m: IntMatrix, cols: int | None = None) -> LatticeBasis:
    """Saturated basis of {v in Z^cols : m @ v = 0}, HNF-canonical.

    Computed from the row HNF of the transpose: the transform rows paired
    with zero HNF rows span the kernel, and the kernel of an integer matrix
    is automatically saturated.  ``cols`` disambiguates the ambient rank
    when the matrix has no rows.
    """
    m = as_matrix(m)
    ncols = len(m[0]) if m else (cols or 0)
    if not m or ncols == 0:
        return LatticeBasis(ncols, tuple(identity(ncols)), True)
    h, u = hermite_normal_form(transpose(m))
    kern = [u[i] for i in range(len(h)) if not any(h[i])]
    basis = row_lattice_basis(kern) if kern else ()
    return LatticeBasis(ncols, basis, True)


def is_saturated(vectors, ambient_rank: int) -> bool:
    """Does the row span equal its saturation in Z^ambient_rank?"""
    vecs = as_matrix(vectors)
    if not vecs:
        return True
    sat = integer_kernel(
        integer_kernel(vecs).matrix(), cols=ambient_rank
    ).vectors
    return lattices_equal(vecs, sat)


def quotient_projection(ambient_rank: int, sub: LatticeBasis) -> IntMatrix:
    """Integer chart for Z^ambient / <sub>, as an (ambient-k) x ambient matrix.

    Rows are the canonical basis of the orthogonal kernel of ``sub``; the map
    kills exactly the sublattice and is surjective because a saturated
    sublattice has coprime maximal minors.
    """
    if sub.vectors and len(sub.vectors[0]) != ambient_rank:
        raise ValueError("sublattice vectors have wrong ambient rank")
    if not sub.saturated or not is_saturated(sub.vectors, ambient_rank):
        raise NotSaturated(f"sublattice of Z^{ambient_rank} is not saturated")
    if not sub.vectors:
        return identity(ambient_rank)
    proj = integer_kernel(sub.matrix(), cols=ambient_rank).matrix()
    assert len(proj) == ambient_rank - len(sub.vectors)
    return proj


def solve_unique_rational(m, v):
    """The unique rational solution x of m @ x = v, or None if inconsistent.

    Requires the columns of m to be linearly independent (the solution, when
    it exists, is then unique).
    """
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, v)]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank < ncols:
        raise ValueError("columns are not linearly independent")
    for i in range(rank, len(rows)):
        if rows[i][-1]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = rows[r][-1]
    return tuple(x)


def solve_integer(m, v):
    """Unique integer solution of m @ x = v, or None (columns independent)."""
    x = solve_unique_rational(m, v)
    if x is None or any(c.denominator != 1 for c in x):
        return None
    return tuple(int(c) for c in x)


def solve_in_row_span(basis: IntMatrix, target: IntVector):
    """Coefficients c with c @ basis = target, or None.  Rows independent."""
    x = solve_unique_rational(transpose(basis), target)
    return x


def matrices_to_json(m) -> list[list[str]]:
    """Arbitrary-precision-safe JSON form: decimal strings."""
    return [[str(int(x)) for x in row] for row in m]


def matrix_from_json(data) -> IntMatrix:
    return as_matrix([[int(x) for x in row] for row in data])
