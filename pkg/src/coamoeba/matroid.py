"""The rational vector matroid of a configuration B.

Bases are enumerated by brute force over all rank-sized subsets (the intended
scale is n <= 16, d <= 6, where exactness and simplicity beat oracle-based
matroid algorithms).  A flat is stored by its form-set F, the labels whose
vectors vanish on the subspace L = cap ker(b); its ``corank`` is the rank of
the span of F, which equals d - dim L.  Connectivity uses the basis-exchange
graph: vertices are elements, with an edge b -- b' whenever some basis
through b stays a basis after swapping b for b'.

Restriction and contraction follow the hyperplane-arrangement picture:
``restrict_to_flat`` produces the images B|_L of the non-vanishing vectors in
the quotient lattice M / L_perp, while ``contract_flat`` rewrites the
vanishing vectors in coordinates on their own span.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .configuration import VectorConfiguration
from .errors import Disconnected, NotSpanning, ZeroVector


@dataclass(frozen=True)
class Flat:
    """A flat of the matroid, recorded by its form-set.

    ``forms`` are indices into the configuration, ``corank`` is the rank of
    their span, and ``space_basis`` is the canonical saturated basis of the
    subspace L on which they all vanish.
    """

    forms: frozenset[int]
    corank: int
    space_basis: tuple[la.IntVector, ...]

    def dim(self, d: int) -> int:
        return d - self.corank

    def sort_key(self) -> tuple:
        return (self.corank, tuple(sorted(self.forms)))


@dataclass(frozen=True)
class FlagOfFlats:
    """A strictly increasing chain of proper nonzero flats.

    Stored with the subspaces L increasing, equivalently the form-sets F
    strictly decreasing; the trivial ends {0} and V are implicit.
    """

    flats: tuple[Flat, ...]

    def __post_init__(self):
        forms = [f.forms for f in self.flats]
        if any(not (forms[i] > forms[i + 1]) for i in range(len(forms) - 1)):
            raise ValueError("form-sets must strictly decrease along the flag")

    def form_chain(self) -> tuple[frozenset[int], ...]:
        return tuple(f.forms for f in self.flats)

    def is_complete(self, d: int) -> bool:
        return [f.corank for f in self.flats] == list(range(d - 1, 0, -1))


@dataclass(frozen=True)
class ParallelMerge:
    """Record of one merged parallel class.

    The class {c = q_c * eta} contributes the constant
    (prod q_c^{q_c}) / (sum q_c)^{sum q_c} relative to its merged sum; when
    the constant is negative the arguments shift by pi on the odd
    coordinates of eta. ``arg_shift_pi`` holds that shift in units of pi.
    """

    labels: tuple[str, ...]
    eta: la.IntVector
    constant: Fraction
    arg_shift_pi: tuple[int, ...]
    removed: bool


class Matroid:
    """Immutable matroid of a spanning configuration of nonzero vectors."""

    def __init__(self, config: VectorConfiguration):
        if any(not any(row) for row in config.matrix):
            raise ZeroVector("configuration contains a zero vector")
        self.config = config
        self.n = config.n
        self.rank = la.rank_rational(config.matrix)
        if self.rank != config.d:
            raise NotSpanning("rows do not span the ambient space")
        self.bases = frozenset(
            frozenset(sub)
            for sub in itertools.combinations(range(self.n), self.rank)
            if la.rank_rational([config.matrix[i] for i in sub]) == self.rank
        )
        self.parallel_classes = self._parallel_classes()
        self._flats: list[Flat] | None = None
        self._connected: bool | None = None

    # -- basic structure -----------------------------------------------------

    def _parallel_classes(self) -> tuple[frozenset[int], ...]:
        key_to_class: dict[la.IntVector, list[int]] = {}
        for i, row in enumerate(self.config.matrix):
            key = la.primitive(row)
            neg = tuple(-x for x in key)
            if neg in key_to_class:
                key = neg
            key_to_class.setdefault(key, []).append(i)
        classes = [frozenset(v) for v in key_to_class.values()]
        return tuple(sorted(classes, key=min))

    def labels_of(self, forms) -> tuple[str, ...]:
        return tuple(self.config.labels[i] for i in sorted(forms))

    def _span_rank(self, forms) -> int:
        if not forms:
            return 0
        return la.rank_rational([self.config.matrix[i] for i in sorted(forms)])

    def make_flat(self, forms) -> Flat:
        forms = frozenset(forms)
        rows = [self.config.matrix[i] for i in sorted(forms)]
        basis = la.integer_kernel(la.as_matrix(rows)).vectors if forms else tuple(
            la.identity(self.config.d)
        )
        return Flat(forms=forms, corank=self._span_rank(forms), space_basis=basis)

    def closure(self, forms) -> Flat:
        """Smallest flat containing ``forms``: all labels inside their span."""
        forms = frozenset(forms)
        if not forms:
            return self.make_flat(frozenset())
        rows = [self.config.matrix[i] for i in sorted(forms)]
        r = la.rank_rational(rows)
        closed = set(forms)
        for i in range(self.n):
            if i in closed:
                continue
            if la.rank_rational(rows + [self.config.matrix[i]]) == r:
                closed.add(i)
        return self.make_flat(frozenset(closed))

    def flats(self) -> list[Flat]:
        """All flats graded by corank, including the empty set and all of B."""
        if self._flats is not None:
            return self._flats
        by_forms: dict[frozenset[int], Flat] = {}
        zero = self.closure(frozenset())
        by_forms[zero.forms] = zero
        frontier = [zero]
        while frontier:
            nxt: dict[frozenset[int], Flat] = {}
            for flat in frontier:
                for i in range(self.n):
                    if i in flat.forms:
                        continue
                    bigger = self.closure(flat.forms | {i})
                    if bigger.forms not in by_forms and bigger.forms not in nxt:
                        nxt[bigger.forms] = bigger
            by_forms.update(nxt)
            frontier = list(nxt.values())
        self._flats = sorted(by_forms.values(), key=Flat.sort_key)
        return self._flats

    def proper_flats(self) -> list[Flat]:
        return [f for f in self.flats() if 0 < f.corank < self.rank]

    def flats_of_corank(self, corank: int) -> list[Flat]:
        return [f for f in self.flats() if f.corank == corank]

    # -- connectivity ----------------------------------------------------------

    def exchange_graph(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(self.n)}
        for basis in self.bases:
            outside = [i for i in range(self.n) if i not in basis]
            for b in basis:
                rest = basis - {b}
                for b2 in outside:
                    if rest | {b2} in self.bases:
                        adj[b].add(b2)
                        adj[b2].add(b)
        return adj

    def is_connected(self) -> bool:
        """Single component of the basis-exchange graph."""
        if self._connected is not None:
            return self._connected
        if self.n == 0:
            self._connected = True
            return True
        adj = self.exchange_graph()
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        self._connected = len(seen) == self.n
        return self._connected

    def components(self) -> list[frozenset[int]]:
        adj = self.exchange_graph()
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                for j in adj[stack.pop()]:
                    if j not in comp:
                        comp.add(j)
                        stack.append(j)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    # -- restriction / contraction ---------------------------------------------

    def perp_basis(self, flat: Flat) -> la.LatticeBasis:
        """Saturation of the Z-span of the flat's forms (the lattice L_perp)."""
        sub = la.integer_kernel(la.as_matrix(flat.space_basis))
        assert len(sub.vectors) == flat.corank
        return sub

    def restrict_to_flat(self, flat: Flat) -> tuple[VectorConfiguration, la.IntMatrix]:
        """Images B|_L of the non-vanishing vectors in M / L_perp.

        The projection is the canonical quotient chart; the images are all
        nonzero because the flat is closed.
        """
        proj = la.quotient_projection(self.config.d, self.perp_basis(flat))
        rows = []
        labels = []
        for i in range(self.n):
            if i in flat.forms:
                continue
            image = la.mat_vec(proj, self.config.matrix[i])
            assert any(image), "image of a vector outside a flat cannot vanish"
            rows.append(image)
            labels.append(self.config.labels[i])
        return VectorConfiguration(la.as_matrix(rows), tuple(labels)), proj

    def contract_flat(self, flat: Flat) -> VectorConfiguration:
        """The vectors of the flat, written on a basis of their own span."""
        span = la.integer_kernel(la.as_matrix(flat.space_basis)).matrix()
        rows = []
        labels = []
        for i in sorted(flat.forms):
            coeffs = la.solve_in_row_span(span, self.config.matrix[i])
            assert coeffs is not None and all(c.denominator == 1 for c in coeffs)
            rows.append(tuple(int(c) for c in coeffs))
            labels.append(self.config.labels[i])
        return VectorConfiguration(la.as_matrix(rows), tuple(labels))

    # -- flacets -----------------------------------------------------------------

    def flacets(self) -> list[Flat]:
        """Proper nonzero flats whose form-set and restriction are both connected."""
        if not self.is_connected():
            raise Disconnected("flacets are defined for connected configurations")
        out = []
        for flat in self.proper_flats():
            inner = Matroid(self.contract_flat(flat))
            if not inner.is_connected():
                continue
            restricted, _ = self.restrict_to_flat(flat)
            if Matroid(restricted).is_connected():
                out.append(flat)
        return out


def build(config: VectorConfiguration) -> Matroid:
    return Matroid(config)


def merge_parallel(
    config: VectorConfiguration,
) -> tuple[VectorConfiguration, tuple[ParallelMerge, ...]]:
    """Replace each parallel class by its vector sum.

    Classes with zero sum disappear entirely.  Each nontrivial class records
    the exact constant it contributes relative to the merged vector and the
    induced argument shift (0 for a positive constant, pi on the odd
    coordinates of eta for a negative one).  The total row sum is preserved.
    """
    key_to_members: dict[la.IntVector, list[int]] = {}
    order: list[la.IntVector] = []
    for i, row in enumerate(config.matrix):
        key = la.primitive(row)
        neg = tuple(-x for x in key)
        if neg in key_to_members:
            key = neg
        if key not in key_to_members:
            key_to_members[key] = []
            order.append(key)
        key_to_members[key].append(i)

    rows: list[la.IntVector] = []
    labels: list[str] = []
    merges: list[ParallelMerge] = []
    d = config.d
    for eta in order:
        members = key_to_members[eta]
        qs = []
        for i in members:
            row = config.matrix[i]
            j = next(k for k in range(d) if eta[k])
            q, rem = divmod(row[j], eta[j])
            assert rem == 0 and tuple(q * e for e in eta) == row
            qs.append(q)
        total = sum(qs)
        merged = tuple(total * e for e in eta)
        member_labels = tuple(config.labels[i] for i in members)
        if len(members) == 1:
            rows.append(config.matrix[members[0]])
            labels.append(member_labels[0])
            continue
        constant = Fraction(1)
        for q in qs:
            constant *= Fraction(q) ** q
        if total:
            constant /= Fraction(total) ** total
        shift = tuple((e % 2) if constant < 0 else 0 for e in eta)
        merges.append(
            ParallelMerge(
                labels=member_labels,
                eta=eta,
                constant=constant,
                arg_shift_pi=shift,
                removed=total == 0,
            )
        )
        if total:
            rows.append(merged)
            labels.append("+".join(member_labels))
    reduced = VectorConfiguration(la.as_matrix(rows), tuple(labels))
    kept_sum = tuple(sum(r[j] for r in rows) for j in range(d))
    assert kept_sum == config.row_sum()
    return reduced, tuple(merges)


def connected_via_circuits(config: VectorConfiguration) -> bool:
    """Independent connectivity oracle: every pair lies on a common circuit.

    Exponential circuit enumeration; intended only as a cross-check on small
    ground sets.
    """
    n = config.n
    if n <= 1:
        return True
    circuits = []
    for size in range(1, n + 1):
        for sub in itertools.combinations(range(n), size):
            rows = [config.matrix[i] for i in sub]
            if la.rank_rational(rows) >= len(sub):
                continue  # independent
            if all(
                la.rank_rational([config.matrix[i] for i in sub if i != j])
                == len(sub) - 1
                for j in sub
            ):
                circuits.append(frozenset(sub))
    for i, j in itertools.combinations(range(n), 2):
        if not any(i in c and j in c for c in circuits):
            return False
    return True
