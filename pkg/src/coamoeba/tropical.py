"""Weights, induced matroids, flags of flats, and the Bergman fan.

A weight w on the ground set selects the bases of maximal total weight; this
max convention is what makes the induced objects compatible with
min-convention initial forms of polynomials downstream.  The tropical set
consists of the weights whose induced matroid is loopless; it carries the
all-ones lineality direction.

A loopless weight induces a flag of flats: the strict level sets (read from
the top value down) must each be closed.  Flags index the cones of the fine
subdivision; grouping the complete flags by their induced matroid recovers
the coarse (Bergman) cones, whose rays are the indicator vectors of the
flacets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import Disconnected, LevelSetNotAFlat, NotInTropical
from .matroid import Flat, FlagOfFlats, Matroid

Weight = tuple[Fraction, ...]


def weight(values) -> Weight:
    return tuple(Fraction(v) for v in values)


def indicator(n: int, forms) -> Weight:
    return tuple(Fraction(1 if i in forms else 0) for i in range(n))


@dataclass(frozen=True)
class InducedMatroid:
    max_bases: frozenset[frozenset[int]]
    loops: frozenset[int]


def induced_matroid(m: Matroid, w: Weight) -> InducedMatroid:
    """Bases of maximal w-weight, and the elements lying in none of them."""
    if len(w) != m.n:
        raise ValueError("weight length must match the ground set")
    best = None
    max_bases: list[frozenset[int]] = []
    for basis in m.bases:
        total = sum(w[i] for i in basis)
        if best is None or total > best:
            best = total
            max_bases = [basis]
        elif total == best:
            max_bases.append(basis)
    covered = frozenset().union(*max_bases)
    loops = frozenset(range(m.n)) - covered
    return InducedMatroid(max_bases=frozenset(max_bases), loops=loops)


def in_tropical(m: Matroid, w: Weight) -> bool:
    return not induced_matroid(m, w).loops


def weight_to_flag(m: Matroid, w: Weight) -> FlagOfFlats:
    """The flag of flats induced by a loopless weight.

    Level sets are read from the largest value down; each strict upper level
    set must be a flat.  A loopless weight whose chain fails the flat check
    is surfaced as LevelSetNotAFlat rather than repaired.
    """
    if not in_tropical(m, w):
        raise NotInTropical("weight induces loops")
    values = sorted(set(w))
    chain = []
    for v in values[:-1]:
        forms = frozenset(i for i in range(m.n) if w[i] > v)
        flat = m.closure(forms)
        if flat.forms != forms:
            raise LevelSetNotAFlat(
                f"level set {sorted(forms)} is not closed for this weight"
            )
        chain.append(flat)
    return FlagOfFlats(tuple(chain))


def flag_cone_contains(flag: FlagOfFlats, w: Weight, strict: bool = True) -> bool:
    """Is w in the (relative interior of the) cone of this flag?

    The weight must be constant on each difference of consecutive form-sets
    and increase with depth; ``strict=False`` tests the closed cone instead.
    """
    n = len(w)
    sets = [frozenset(range(n))] + list(flag.form_chain()) + [frozenset()]
    level_values = []
    for outer, inner in zip(sets, sets[1:]):
        diff = outer - inner
        vals = {w[i] for i in diff}
        if len(vals) != 1:
            return False
        level_values.append(next(iter(vals)))
    for lo, hi in zip(level_values, level_values[1:]):
        if strict and not hi > lo:
            return False
        if not strict and not hi >= lo:
            return False
    return True


def interior_weight(flag: FlagOfFlats, n: int) -> Weight:
    """A canonical weight in the relative interior: depth in the chain."""
    depth = [0] * n
    for flat in flag.form_chain():
        for i in flat:
            depth[i] += 1
    return weight(depth)


def bergman_rays(m: Matroid) -> list[tuple[Flat, Weight]]:
    """One ray per flacet: the indicator of its form-set, modulo lineality."""
    if not m.is_connected():
        raise Disconnected("Bergman rays require a connected configuration")
    return [(flat, indicator(m.n, flat.forms)) for flat in m.flacets()]


def all_flags(m: Matroid) -> list[FlagOfFlats]:
    """Every flag of proper nonzero flats, the trivial (empty) flag included."""
    proper = m.proper_flats()
    flags: list[FlagOfFlats] = [FlagOfFlats(())]
    # chains built upward: each step picks a flat with strictly smaller form-set
    def extend(chain):
        last = chain[-1]
        for flat in proper:
            if flat.forms < last.forms:
                nxt = chain + [flat]
                flags.append(FlagOfFlats(tuple(nxt)))
                extend(nxt)

    for flat in proper:
        flags.append(FlagOfFlats((flat,)))
        extend([flat])
    return flags


def complete_flags(m: Matroid) -> list[FlagOfFlats]:
    """Flags containing a flat of every corank rank-1 .. 1 (fine maximal cones)."""
    out = [f for f in all_flags(m) if f.is_complete(m.rank)]
    return sorted(out, key=lambda f: tuple(sorted(flat.forms) for flat in f.flats))


@dataclass(frozen=True)
class BergmanCone:
    """A maximal cone of the coarse (Bergman) structure on the tropical set.

    ``flags`` are the complete flags whose fine cones share this induced
    matroid; ``spanning_flacets`` are the flacets whose indicator rays lie on
    the cone's boundary.
    """

    flags: tuple[FlagOfFlats, ...]
    spanning_flacets: tuple[Flat, ...]
    max_bases: frozenset[frozenset[int]]

    @property
    def ray_coranks(self) -> tuple[int, ...]:
        return tuple(sorted(f.corank for f in self.spanning_flacets))


def maximal_cones(m: Matroid) -> list[BergmanCone]:
    """Maximal Bergman cones, as groups of complete flags with one induced matroid.

    Weights interior to a fine cone of a complete flag determine the same
    set of maximal bases across the whole coarse cone, so grouping complete
    flags by that set enumerates the maximal cones exactly.
    """
    if not m.is_connected():
        raise Disconnected("Bergman cones require a connected configuration")
    flacet_list = m.flacets()
    groups: dict[frozenset[frozenset[int]], list[FlagOfFlats]] = {}
    for flag in complete_flags(m):
        ind = induced_matroid(m, interior_weight(flag, m.n))
        groups.setdefault(ind.max_bases, []).append(flag)
    cones = []
    for max_bases, flags in groups.items():
        spanning = tuple(
            flat
            for flat in flacet_list
            if any(
                flag_cone_contains(fl, indicator(m.n, flat.forms), strict=False)
                for fl in flags
            )
        )
        cones.append(
            BergmanCone(
                flags=tuple(flags), spanning_flacets=spanning, max_bases=max_bases
            )
        )
    return sorted(
        cones, key=lambda c: tuple(sorted(tuple(sorted(f.forms)) for f in c.spanning_flacets))
    )
