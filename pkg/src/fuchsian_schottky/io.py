"""JSON and CSV formats.

Matrix:   {"a": .., "b": .., "c": .., "d": ..}  (read un-normalized, stored normalized)
Point:    a number, or the string "inf"
Circle:   {"center": .., "radius": ..}
Group:    {"tol": 1e-9, "generators": [matrix, ...], "circles": [circle, ...]}
          with circles[2i], circles[2i+1] = (C_i, C'_i); optional "frame" matrix.
"""
from __future__ import annotations

import csv
import io
import json
import math

from ._tol import resolve
from .boundary import BoundaryPoint, as_point
from .geometry import CircleOnAxis
from .moebius import IDENTITY, MoebiusMap, normalize
from .system import LimitSample, SchottkySystem, format_word


def _num(x: float) -> float:
    return x + 0.0  # no negative zeros in output


def matrix_to_json(T: MoebiusMap) -> dict:
    return {"a": _num(T.a), "b": _num(T.b), "c": _num(T.c), "d": _num(T.d)}


def matrix_from_json(obj, tol=None) -> MoebiusMap:
    if isinstance(obj, dict):
        return normalize(obj, tol=tol)
    return normalize(obj, tol=tol)


def point_to_json(p: BoundaryPoint):
    r = p.to_real()
    return "inf" if math.isinf(r) else _num(r)


def point_from_json(obj) -> BoundaryPoint:
    return as_point(obj)


def circle_to_json(C: CircleOnAxis) -> dict:
    return {"center": _num(C.center), "radius": _num(C.radius)}


def circle_from_json(obj) -> CircleOnAxis:
    return CircleOnAxis(float(obj["center"]), float(obj["radius"]))


def system_to_json(sys: SchottkySystem, tol=None) -> dict:
    out = {
        "tol": resolve(tol),
        "generators": [matrix_to_json(g) for g in sys.generators],
        "circles": [circle_to_json(C) for C in sys.circles],
    }
    if not sys.frame.isclose(IDENTITY, 0.0):
        out["frame"] = matrix_to_json(sys.frame)
    return out


def system_from_json(obj, tol=None) -> SchottkySystem:
    gens = [matrix_from_json(m, tol) for m in obj["generators"]]
    circles = [circle_from_json(c) for c in obj.get("circles", [])]
    if len(circles) != 2 * len(gens):
        raise ValueError(f"{len(gens)} generators need {2 * len(gens)} circles, got {len(circles)}")
    pairs = [(circles[2 * i], circles[2 * i + 1]) for i in range(len(gens))]
    frame = matrix_from_json(obj["frame"], tol) if "frame" in obj else IDENTITY
    return SchottkySystem(gens, pairs, frame=frame)


def generators_from_json(obj, tol=None) -> tuple[MoebiusMap, ...]:
    """Generators of a group file or of a pair file (key ``"pair"``)."""
    key = "pair" if "pair" in obj else "generators"
    return tuple(matrix_from_json(m, tol) for m in obj[key])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def limit_set_csv(samples: list[LimitSample]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "point", "center", "radius"])
    for s in samples:
        w.writerow([format_word(s.word), repr(_num(s.point)),
                    repr(_num(s.circle.center)), repr(_num(s.circle.radius))])
    return buf.getvalue()
