"""Floating-point sampling and exact certification of discriminant data.

Sampling draws complex standard normal points per coordinate, rejects those
within 1e-8 * ||y|| of the hyperplane arrangement, and maps through the
Horn-Kapranov parameterization and the coordinatewise argument.  Streams are
derived per chunk as seed + chunk_index, so a parallel run (capped by the
COAMOEBA_THREADS environment variable) produces bit-identical output to a
sequential one.

Exact checks walk a fixed small-integer grid: ``residue_check`` reports the
largest exact value of a candidate defining polynomial on the parameterized
hypersurface (zero certifies vanishing; anything else is evidence of a typo
in the input polynomial and is reported, never "corrected"), and
``gauss_roundtrip`` certifies that the logarithmic Gauss map inverts the
parameterization at sample points, skipping the measure-zero singular locus
where the Gauss map is undefined.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cycles import contains_pls3, pls3_distance, prisms_d3
from .discriminant import (
    HornKapranovMap,
    OnArrangement,
    SingularPoint,
    log_gauss,
    projectively_equal,
    psi_exact,
)
from .errors import Defective, DimensionNot3
from .matroid import Matroid
from .polynomial import SparsePoly, evaluate_exact

REJECTION_THRESHOLD = 1e-8
_CHUNK = 2048


@dataclass(frozen=True)
class SampleReport:
    n_samples: int
    n_valid: int
    inside_fraction: float
    max_boundary_distance: float
    seed: int
    tolerance: float


def _thread_count() -> int:
    env = os.environ.get("COAMOEBA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def _sample_chunk(bmat: np.ndarray, seed: int, chunk_index: int, size: int) -> np.ndarray:
    """Arguments of psi at ``size`` random points, arrangement rejections dropped."""
    rng = np.random.default_rng(seed + chunk_index)
    y = rng.standard_normal((size, bmat.shape[1])) + 1j * rng.standard_normal(
        (size, bmat.shape[1])
    )
    pair = y @ bmat.T  # <b_a, y> per row a
    norms = np.linalg.norm(y, axis=1)
    keep = np.all(np.abs(pair) >= REJECTION_THRESHOLD * norms[:, None], axis=1)
    pair = pair[keep]
    d = bmat.shape[1]
    psi = np.empty((pair.shape[0], d), dtype=complex)
    for j in range(d):
        psi[:, j] = np.prod(pair ** bmat[:, j], axis=1)
    return np.angle(psi)


def sample_coamoeba(m: Matroid, n: int, seed: int) -> np.ndarray:
    """n points of the discriminant coamoeba, deterministic per seed.

    Points are Arg(psi(y)) in (-pi, pi]^d for complex standard normal y.
    """
    bmat = np.array(m.config.matrix, dtype=float)
    if n == 0:
        return np.empty((0, m.config.d))
    chunks: list[np.ndarray] = []
    total = 0
    index = 0
    workers = _thread_count()
    while total < n:
        batch = list(range(index, index + workers))
        index += workers
        if workers == 1:
            results = [_sample_chunk(bmat, seed, c, _CHUNK) for c in batch]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(
                    pool.map(lambda c: _sample_chunk(bmat, seed, c, _CHUNK), batch)
                )
        for r in results:  # chunk order fixed, so parallelism cannot reorder output
            chunks.append(r)
            total += len(r)
    return np.concatenate(chunks)[:n]


def rational_grid(d: int):
    """Deterministic stream of small nonzero integer points in Z^d.

    Coordinates cycle through 1, -1, 2, -2, 3, ... in mixed patterns; the
    stream never repeats a point and avoids the origin.
    """
    magnitudes = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 4, -4, 6, -6]
    for combo in itertools.product(magnitudes, repeat=d):
        yield combo


def residue_check(f: SparsePoly, m: Matroid, n: int):
    """Max |f(psi(y))| over n exact rational grid points, with a witness.

    Returns (max_residue, witness_point).  A nonzero residue means f does
    not vanish on the parameterized hypersurface; the exact value is
    reported for diagnosis.
    """
    h = HornKapranovMap(m.config)
    worst = Fraction(0)
    witness = None
    taken = 0
    for y in rational_grid(m.config.d):
        if taken >= n:
            break
        try:
            image = psi_exact(h, y)
        except OnArrangement:
            continue
        taken += 1
        value = abs(evaluate_exact(f, image))
        if value > worst:
            worst = value
            witness = y
    return worst, witness


@dataclass(frozen=True)
class RoundtripResult:
    passed: bool
    n_checked: int
    n_singular_skipped: int
    counterexample: tuple | None


def gauss_roundtrip(f: SparsePoly, m: Matroid, n: int) -> RoundtripResult:
    """Check log_gauss(f, psi(y)) == y projectively at n exact grid points.

    Points where psi(y) is a singular point of f (all logarithmic partials
    vanish) are skipped and counted; the inverse statement is generic.
    """
    h = HornKapranovMap(m.config)
    checked = 0
    singular = 0
    for y in rational_grid(m.config.d):
        if checked >= n:
            break
        try:
            image = psi_exact(h, y)
        except OnArrangement:
            continue
        try:
            g = log_gauss(f, image)
        except SingularPoint:
            singular += 1
            continue
        checked += 1
        if not projectively_equal(g, tuple(Fraction(c) for c in y)):
            return RoundtripResult(False, checked, singular, y)
    return RoundtripResult(True, checked, singular, None)


def certify_discriminant(f: SparsePoly, m: Matroid, n: int = 20) -> dict:
    """Residue and roundtrip certification combined, with erratum diagnosis.

    status is "ok" when the polynomial vanishes on the image and the Gauss
    map inverts; otherwise "erratum" with the exact residue recorded, and
    the caller should treat downstream identities as inconclusive.
    """
    residue, witness = residue_check(f, m, n)
    roundtrip = gauss_roundtrip(f, m, n)
    ok = residue == 0 and roundtrip.passed
    return {
        "status": "ok" if ok else "erratum",
        "max_residue": str(residue),
        "residue_witness": list(witness) if witness else None,
        "roundtrip_passed": roundtrip.passed,
        "roundtrip_checked": roundtrip.n_checked,
        "roundtrip_singular_skipped": roundtrip.n_singular_skipped,
        "roundtrip_counterexample": list(roundtrip.counterexample)
        if roundtrip.counterexample
        else None,
    }


def conjecture_experiment_d3(
    m: Matroid, n: int, tol: float = 1e-6, seed: int = 0
) -> SampleReport:
    """Sampled check that the coamoeba lies inside the union of prisms.

    inside_fraction is the fraction of sampled coamoeba points contained in
    some prism (within tol); max_boundary_distance is the worst projected
    distance of any sample to the prism union.  n = 0 yields the vacuous
    report inside_fraction = 1 with n_valid = 0.
    """
    if m.config.d != 3:
        raise DimensionNot3("the prism experiment needs d = 3")
    prisms = prisms_d3(m)
    if not prisms:
        raise Defective("no essential flacets; nothing to compare against")
    points = sample_coamoeba(m, n, seed)
    if len(points) == 0:
        return SampleReport(n, 0, 1.0, 0.0, seed, tol)
    inside = 0
    worst = 0.0
    for theta in points:
        dist = pls3_distance(prisms, theta)
        if dist <= tol:
            inside += 1
        if dist > worst:
            worst = dist
    return SampleReport(
        n_samples=n,
        n_valid=len(points),
        inside_fraction=inside / len(points),
        max_boundary_distance=worst,
        seed=seed,
        tolerance=tol,
    )
