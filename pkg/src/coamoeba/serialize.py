"""JSON/CSV serialization shared by the library surface and the CLI.

Configurations travel as {"role": "A"|"B", "matrix": [["1", ...], ...],
"labels": [...]} with entries as decimal strings (arbitrary precision).
Angles are emitted twice: as IEEE doubles in radians for plotting, and as
exact rational-multiple-of-pi strings like "3/4*pi" where exactness is
available.  All emitters sort keys and use fixed formatting so outputs are
byte-identical across runs.
"""

from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction

from . import intlinalg as la
from .configuration import PointConfiguration, VectorConfiguration
from .cycles import CoamoebaCycle, Polygon, Prism
from .errors import InputError


def pi_string(value: Fraction) -> str:
    """Exact angle as a rational multiple of pi: "0", "pi", "-3/4*pi", "2*pi"."""
    value = Fraction(value)
    if value == 0:
        return "0"
    num, den = value.numerator, value.denominator
    if den == 1:
        return "pi" if num == 1 else ("-pi" if num == -1 else f"{num}*pi")
    return f"{num}/{den}*pi"


def parse_pi_string(text: str) -> Fraction:
    """Inverse of pi_string; also accepts bare rationals as multiples of pi."""
    text = text.strip().replace(" ", "")
    if text in ("0", "-0"):
        return Fraction(0)
    if text == "pi":
        return Fraction(1)
    if text == "-pi":
        return Fraction(-1)
    if text.endswith("*pi"):
        return Fraction(text[:-3])
    return Fraction(text)


def angle_json(value: Fraction) -> dict:
    return {"radians": float(value) * math.pi, "exact": pi_string(value)}


def polygon_json(poly: Polygon) -> dict:
    return {
        "vertices": [[angle_json(x), angle_json(y)] for x, y in poly.vertices],
        "area_pi2": str(poly.area()),
        "simple": poly.is_simple(),
    }


def cycle_json(cycle: CoamoebaCycle) -> dict:
    return {
        "zonotope": polygon_json(cycle.zonotope),
        "plus": polygon_json(cycle.plus),
        "minus": polygon_json(cycle.minus),
        "degree": cycle.degree,
        "arg_shift": [pi_string(Fraction(s)) for s in cycle.arg_shift_pi],
        "simple_boundary": cycle.simple_boundary,
    }


def prism_json(prism: Prism, labels) -> dict:
    return {
        "hyperplane": sorted(labels[i] for i in prism.hyperplane_flat.forms),
        "projection": la.matrices_to_json(prism.projection),
        "base": cycle_json(prism.base),
    }


def config_to_json(config) -> dict:
    role = "A" if isinstance(config, PointConfiguration) else "B"
    return {
        "role": role,
        "matrix": la.matrices_to_json(config.matrix),
        "labels": list(config.labels),
    }


def config_from_json(data):
    try:
        role = data["role"]
        matrix = la.matrix_from_json(data["matrix"])
        labels = tuple(str(x) for x in data["labels"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed configuration JSON: {exc}") from exc
    if role == "A":
        return PointConfiguration(matrix, labels)
    if role == "B":
        return VectorConfiguration(matrix, labels)
    raise InputError(f"unknown configuration role {role!r}")


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_json(json.load(fh))


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


def provenance(version: str, inputs: dict[str, str], parameters: dict) -> dict:
    return {
        "version": version,
        "input_sha256": {name: sha256_file(path) for name, path in inputs.items()},
        "parameters": parameters,
    }


def dump_json(payload: dict, path=None) -> str:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def write_csv_cloud(path, points) -> None:
    """Point cloud as CSV with header theta1..thetad, radians."""
    d = points.shape[1] if len(points) else 0
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(f"theta{i+1}" for i in range(d)) + "\n")
        for row in points:
            fh.write(",".join(repr(float(x)) for x in row) + "\n")
