"""Text and JSON formats: quiver files, matrices, representations, complexes, derived objects.

Scalars are written as strings (``"p/q"`` over Q, residues over F_p) so no
floating point ever enters a document.  Every top-level document carries
``"schema": 1``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .derivedcat import DbIndec, DbObject, DerivedCategory
from .dgkernel import Complex
from .exactlin import GF, QQ, Field, Matrix, parse_scalar
from .quiverrep import Quiver, QuiverError, Rep, RepMorphism, interval_of

__all__ = [
    "SCHEMA",
    "parse_quiver",
    "format_quiver",
    "parse_field",
    "field_name",
    "scalar_to_str",
    "matrix_to_json",
    "matrix_from_json",
    "quiver_to_json",
    "quiver_from_json",
    "rep_to_json",
    "rep_from_json",
    "complex_to_json",
    "complex_from_json",
    "dbobject_to_json",
    "dbobject_from_json",
    "dumps",
]

SCHEMA = 1


def parse_quiver(text: str) -> Quiver:
    """Parse ``vertices n`` followed by ``arrow s t`` lines; ``#`` starts a comment."""
    n = None
    arrows = []
    for lineno, raw in enumerate(text.replace(";", "\n").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2:
                if n is not None:
                    raise QuiverError(f"line {lineno}: duplicate vertices declaration")
                n = int(parts[1])
            elif parts[0] == "arrow" and len(parts) == 3:
                if n is None:
                    raise QuiverError(f"line {lineno}: arrow before vertices declaration")
                arrows.append((int(parts[1]), int(parts[2])))
            else:
                raise QuiverError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, QuiverError):
                raise
            raise QuiverError(f"line {lineno}: {exc}") from None
    if n is None:
        raise QuiverError("missing 'vertices n' line")
    return Quiver(n, tuple(arrows))


def format_quiver(q: Quiver) -> str:
    lines = [f"vertices {q.vertex_count}"]
    lines += [f"arrow {s} {t}" for s, t in q.arrows]
    return "\n".join(lines) + "\n"


def parse_field(text: str | int) -> Field:
    if str(text).upper() in ("Q", "QQ"):
        return QQ
    try:
        return GF(int(text))
    except ValueError as exc:
        raise ValueError(f"field must be Q or a prime, got {text!r}: {exc}") from None


def field_name(field: Field) -> str | int:
    return "Q" if field is QQ else field.characteristic


def scalar_to_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [scalar_to_str(x) for x in m.entries]}


def matrix_from_json(d: dict, field: Field = QQ) -> Matrix:
    return Matrix(d["rows"], d["cols"], tuple(parse_scalar(str(x), field) for x in d["entries"]), field)


def quiver_to_json(q: Quiver) -> dict:
    return {"vertices": q.vertex_count, "arrows": [list(a) for a in q.arrows]}


def quiver_from_json(d: dict) -> Quiver:
    return Quiver(d["vertices"], tuple(tuple(a) for a in d["arrows"]))


def rep_to_json(r: Rep) -> dict:
    return {"dims": list(r.dims), "maps": [matrix_to_json(m) for m in r.maps]}


def rep_from_json(d: dict, q: Quiver, field: Field) -> Rep:
    return Rep(q, tuple(d["dims"]), tuple(matrix_from_json(m, field) for m in d["maps"]), field)


def complex_to_json(X: Complex) -> dict:
    return {
        "schema": SCHEMA,
        "field": field_name(X.field),
        "quiver": quiver_to_json(X.quiver),
        "objects": [{"degree": n, **rep_to_json(X.obj(n))} for n in X.degrees],
        "differentials": [
            {"degree": n, "mats": [matrix_to_json(m) for m in X.d(n).mats]}
            for n in X.degrees if n - 1 in X.degrees
        ],
    }


def complex_from_json(d: dict) -> Complex:
    field = parse_field(d["field"])
    q = quiver_from_json(d["quiver"])
    objects = {o["degree"]: rep_from_json(o, q, field) for o in d["objects"]}
    diffs = {}
    for e in d["differentials"]:
        n = e["degree"]
        diffs[n] = RepMorphism(objects[n], objects[n - 1], tuple(matrix_from_json(m, field) for m in e["mats"]))
    return Complex.build(objects, diffs, q, field)


def dbindec_to_json(cat: DerivedCategory, x: DbIndec) -> dict:
    return {"module": list(interval_of(cat.module(x).dims, cat.quiver)), "shift": x.shift}


def dbobject_to_json(cat: DerivedCategory, x: DbObject) -> list[dict]:
    return [{**dbindec_to_json(cat, a), "mult": m} for a, m in x.summands]


def _module_index(cat: DerivedCategory, interval) -> int:
    for k, m in enumerate(cat.modules):
        if interval_of(m.dims, cat.quiver) == tuple(interval):
            return k
    raise ValueError(f"no indecomposable with interval {interval}")


def dbindec_from_json(cat: DerivedCategory, d: dict) -> DbIndec:
    return DbIndec(_module_index(cat, d["module"]), d["shift"])


def dbobject_from_json(cat: DerivedCategory, items: list[dict]) -> DbObject:
    return DbObject(tuple((dbindec_from_json(cat, e), e.get("mult", 1)) for e in items))


def dumps(payload: Any) -> str:
    """Deterministic JSON with the schema tag added to top-level objects."""
    if isinstance(payload, dict) and "schema" not in payload:
        payload = {"schema": SCHEMA, **payload}
    return json.dumps(payload, indent=2, sort_keys=False)
