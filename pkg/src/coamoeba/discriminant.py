"""Horn-Kapranov parameterization and the tropical discriminant.

The reduced discriminant of a configuration B (rows summing to zero) is the
closure of the image of psi(y) = prod_b <b,y>^b, a degree-zero homogeneous
map defined off the hyperplane arrangement of B.  When the configuration is
nondefective the logarithmic Gauss map y -> [y_i df/dy_i] inverts psi on a
dense open set.

Nondefectivity is certified by a complete flag of flats whose partial
form-sums escape the previous spans; the rays of the tropical discriminant
are the images b_L of flacet indicator rays (type 1) plus, in the
three-dimensional case, the rays cut out where projected Bergman cones cross
transversally (type 2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from . import tropical
from .configuration import VectorConfiguration
from .errors import (
    Defective,
    DimensionNot3,
    Disconnected,
    NearArrangement,
    OnArrangement,
    SingularPoint,
)
from .matroid import Flat, FlagOfFlats, Matroid
from .polynomial import SparsePoly, evaluate_complex, evaluate_exact, partial_derivative


@dataclass(frozen=True)
class HornKapranovMap:
    """psi for a configuration with zero row sum (hence homogeneous of degree 0)."""

    b: VectorConfiguration

    def __post_init__(self):
        if any(self.b.row_sum()):
            raise ValueError("Horn-Kapranov map needs rows summing to zero")

    @property
    def d(self) -> int:
        return self.b.d


def psi_exact(h: HornKapranovMap, y) -> tuple[Fraction, ...]:
    """Exact value of psi at a rational point off the arrangement.

    Coordinate j is the product over rows b of <b,y>^(b_j); negative
    exponents are exact rational division.  Raises OnArrangement naming the
    first vanishing row.
    """
    yv = [Fraction(v) for v in y]
    if len(yv) != h.d:
        raise ValueError("point length must be d")
    pairings = []
    for i, row in enumerate(h.b.matrix):
        val = sum(Fraction(c) * x for c, x in zip(row, yv))
        if val == 0:
            raise OnArrangement(h.b.labels[i])
        pairings.append(val)
    out = []
    for j in range(h.d):
        v = Fraction(1)
        for val, row in zip(pairings, h.b.matrix):
            e = row[j]
            v *= val**e if e >= 0 else 1 / val ** (-e)
        out.append(v)
    return tuple(out)


def psi_complex(h: HornKapranovMap, y, threshold: float = 1e-12) -> tuple[complex, ...]:
    """Floating value of psi; rejects points numerically on the arrangement."""
    yv = [complex(v) for v in y]
    norm = max(abs(v) for v in yv) or 1.0
    pairings = []
    for i, row in enumerate(h.b.matrix):
        val = sum(c * x for c, x in zip(row, yv))
        if abs(val) < threshold * norm:
            raise NearArrangement(h.b.labels[i])
        pairings.append(val)
    out = []
    for j in range(h.d):
        v = 1 + 0j
        for val, row in zip(pairings, h.b.matrix):
            v *= val ** row[j]
        out.append(v)
    return tuple(out)


def log_gauss(f: SparsePoly, y):
    """[y_1 df/dy_1 : ... : y_d df/dy_d], scaled by its first nonzero coordinate.

    Accepts exact rational or complex points.  Raises SingularPoint when all
    coordinates vanish (the projective point is undefined there).
    """
    exact = all(not isinstance(v, complex) for v in y)
    coords = []
    for j, var in enumerate(f.variables):
        df = partial_derivative(f, var)
        val = evaluate_exact(df, y) if exact else evaluate_complex(df, y)
        coords.append((Fraction(y[j]) if exact else y[j]) * val)
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise SingularPoint("all logarithmic partials vanish")
    return tuple(c / lead for c in coords)


def projectively_equal(u, v) -> bool:
    """Exact projective equality via vanishing 2x2 minors."""
    if len(u) != len(v):
        return False
    if all(x == 0 for x in u) or all(x == 0 for x in v):
        return False
    for (a, b), (c, e) in itertools.combinations(zip(u, v), 2):
        if a * e - b * c != 0:
            return False
    return True


# -- nondefectivity -----------------------------------------------------------


def form_sum(m: Matroid, forms) -> la.IntVector:
    cols = zip(*(m.config.matrix[i] for i in sorted(forms))) if forms else None
    return tuple(sum(c) for c in cols) if forms else (0,) * m.config.d


def _in_span(vector, rows) -> bool:
    if not rows:
        return not any(vector)
    r = la.rank_rational(rows)
    return la.rank_rational(list(rows) + [list(vector)]) == r


def non_splitting_flags(m: Matroid) -> list[FlagOfFlats]:
    """Complete flags whose partial form-sums escape every previous span.

    A flag F_1 < ... < F_(d-1) qualifies when for each j the sum of the
    vectors in F_j does not lie in the span of F_(j-1); the configuration is
    nondefective exactly when one exists.
    """
    if any(m.config.row_sum()):
        raise ValueError("non-splitting flags assume rows summing to zero")
    d = m.rank
    by_corank = {k: m.flats_of_corank(k) for k in range(1, d)}
    results: list[FlagOfFlats] = []

    def extend(chain):
        k = len(chain)
        if k == d - 1:
            results.append(FlagOfFlats(tuple(reversed(chain))))
            return
        prev = chain[-1]
        prev_rows = [m.config.matrix[i] for i in sorted(prev.forms)]
        for flat in by_corank.get(k + 1, ()):
            if not (flat.forms > prev.forms):
                continue
            if _in_span(form_sum(m, flat.forms), prev_rows):
                continue
            extend(chain + [flat])

    for flat in by_corank.get(1, ()):
        if any(form_sum(m, flat.forms)):
            extend([flat])
    return results


def nondefective(m: Matroid | VectorConfiguration) -> bool:
    """Does the dual variety fill a hypersurface?  Zero rows mean no."""
    if isinstance(m, VectorConfiguration):
        if any(not any(row) for row in m.matrix):
            return False
        m = Matroid(m)
    return bool(non_splitting_flags(m))


def non_splitting_flats(m: Matroid) -> list[Flat]:
    seen: dict[frozenset[int], Flat] = {}
    for flag in non_splitting_flags(m):
        for flat in flag.flats:
            seen[flat.forms] = flat
    return sorted(seen.values(), key=Flat.sort_key)


def essential_flacets(m: Matroid) -> list[Flat]:
    """Flacets with dim L >= 2 and nonzero form-sum; they index the
    top-dimensional strata of the phase limit set."""
    out = []
    for flat in m.flacets():
        if flat.dim(m.rank) < 2:
            continue
        if any(form_sum(m, flat.forms)):
            out.append(flat)
    return out


# -- tropical discriminant rays -------------------------------------------------


@dataclass(frozen=True)
class TropRay:
    """A directed ray of the tropical discriminant.

    Type-1 rays are images b_L of flacet indicators and carry their flat;
    type-2 rays arise only from transversal crossings of projected cones.
    """

    direction: la.IntVector
    kind: str  # "type1" | "type2"
    flat: Flat | None
    essential: bool


def tdiscr_rays(m: Matroid) -> list[TropRay]:
    """Type-1 rays: primitive directions of the nonzero flacet sums b_L."""
    if not m.is_connected():
        raise Disconnected("tropical discriminant rays need a connected matroid")
    essentials = {f.forms for f in essential_flacets(m)}
    rays = []
    for flat in m.flacets():
        b_l = form_sum(m, flat.forms)
        if not any(b_l):
            continue
        rays.append(
            TropRay(
                direction=la.primitive(b_l),
                kind="type1",
                flat=flat,
                essential=flat.forms in essentials,
            )
        )
    return rays


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _in_sector(x, u, w) -> bool:
    """Is x a nonnegative combination of independent u, w (all in one plane)?"""
    for i, j in itertools.combinations(range(3), 2):
        det = u[i] * w[j] - u[j] * w[i]
        if det:
            alpha = Fraction(x[i] * w[j] - x[j] * w[i], det)
            beta = Fraction(u[i] * x[j] - u[j] * x[i], det)
            break
    else:
        return False
    if alpha < 0 or beta < 0:
        return False
    recon = tuple(alpha * a + beta * b for a, b in zip(u, w))
    return all(r == Fraction(c) for r, c in zip(recon, x))


def tdiscr_fan_d3(m: Matroid) -> list[TropRay]:
    """All rays of a fan structure on the tropical discriminant when d = 3.

    Each maximal Bergman cone projects to the planar sector spanned by the
    images of its two spanning rays.  Sectors in distinct planes can cross
    in a single ray; any such ray not already among the type-1 images must
    appear in every fan structure.  Coplanar overlaps refine along existing
    type-1 rays and contribute nothing new.
    """
    if m.config.d != 3:
        raise DimensionNot3("type-2 ray discovery is implemented for d = 3 only")
    rays = tdiscr_rays(m)
    type1_dirs = {r.direction for r in rays}
    sectors = []
    for cone in tropical.maximal_cones(m):
        gens = [form_sum(m, f.forms) for f in cone.spanning_flacets]
        if len(gens) != 2:
            continue
        u, w = gens
        if not any(u) or not any(w) or not any(_cross3(u, w)):
            continue  # image is at most a known type-1 ray
        sectors.append((u, w))
    new_dirs = []
    for (u1, w1), (u2, w2) in itertools.combinations(sectors, 2):
        n1, n2 = _cross3(u1, w1), _cross3(u2, w2)
        line = _cross3(n1, n2)
        if not any(line):
            continue  # coplanar
        for cand in (line, tuple(-x for x in line)):
            if _in_sector(cand, u1, w1) and _in_sector(cand, u2, w2):
                direction = la.primitive(cand)
                if direction not in type1_dirs and direction not in new_dirs:
                    new_dirs.append(direction)
    rays.extend(
        TropRay(direction=d, kind="type2", flat=None, essential=False)
        for d in sorted(new_dirs)
    )
    return rays


def require_nondefective(m: Matroid) -> None:
    if not nondefective(m):
        raise Defective("configuration is defective")
