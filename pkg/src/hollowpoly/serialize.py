"""JSON encoding with exact numbers: ints stay ints, other rationals become "p/q"."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from hollowpoly.exactgeo import Direction, Facet, HullStructure

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """Malformed point-set document."""


def exact(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return exact(obj)
    if isinstance(obj, float):
        # only labelled approximate fields carry floats
        return obj
    if isinstance(obj, Direction):
        return list(obj.v)
    if isinstance(obj, HullStructure):
        return hull_summary(obj)
    if isinstance(obj, Facet):
        return {"normal": list(obj.normal), "offset": obj.offset, "vertices": list(obj.vertices)}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def hull_summary(hull: HullStructure) -> dict:
    return {
        "dim": hull.dim,
        "affine_dim": hull.affine_dim,
        "vertices": [list(v) for v in hull.vertices],
        "facets": [to_jsonable(f) for f in hull.facets],
        "equations": [{"normal": list(n), "offset": off} for n, off in hull.equations],
    }


def dumps(report: dict) -> str:
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True) + "\n"


def point_set_document(points, name: str | None = None, metadata: dict | None = None) -> dict:
    pts = [list(p) for p in points]
    doc = {"d": len(pts[0]) if pts else 0, "points": pts}
    if name is not None:
        doc["name"] = name
    if metadata:
        doc["metadata"] = to_jsonable(metadata)
    return doc


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_point_set(text: str) -> tuple[int, list[tuple[int, ...]], str | None]:
    """Validate a ``{"d": .., "points": [[..], ..], "name": ..}`` document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("d", "points"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    d = doc["d"]
    if not _is_int(d) or d < 1:
        raise DocumentError(f"d: expected a positive integer, got {d!r}")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise DocumentError("points: expected a nonempty list")
    pts = []
    for i, p in enumerate(raw):
        if not isinstance(p, list):
            raise DocumentError(f"points[{i}]: expected a list of integers")
        if len(p) != d:
            raise DocumentError(f"points[{i}]: expected {d} coordinates, got {len(p)}")
        for j, c in enumerate(p):
            if not _is_int(c):
                raise DocumentError(
                    f"points[{i}][{j}]: expected an integer, got {type(c).__name__} {c!r}")
        pts.append(tuple(p))
    if len(set(pts)) != len(pts):
        raise DocumentError("points: duplicate entries")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name: expected a string")
    return d, pts, name
