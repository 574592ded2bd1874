"""Serialization: JSON/CSV/pretty renderings and the custom-ambient file format.

Ambient files are JSON objects::

    {"kind": "custom", "id": "Q3", "dim": 3, "degree": 2,
     "sections": [[[k, p, q, value], ...], ...]}

``sections[r]`` lists the nonzero Hodge numbers of ``V_1^r`` (dimension
``dim - r``). ``{"kind": "projective", "dim": N}`` is also accepted.
Canonical output sorts keys and entries and never uses floating point.
"""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path

from .errors import SchemaError, SpecError
from .hodge import BigradedDims, HodgeDiamond, WeightGradedMHS
from .variety import AmbientSpec, CustomAmbient, ProjectiveSpace

_PN = re.compile(r"^P(\d+)$")


def parse_ambient_name(text: str) -> ProjectiveSpace:
    m = _PN.match(text.strip())
    if not m:
        raise SpecError(f"unknown ambient {text!r}; use P<N> or --ambient-file")
    return ProjectiveSpace(int(m.group(1)))


def parse_degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise SpecError(f"degrees must be comma-separated integers, got {text!r}") from None
    if not degrees:
        raise SpecError("no degrees given")
    return degrees


def diamond_to_json(diamond: HodgeDiamond) -> dict:
    entries = sorted((p + q, p, q, v) for (p, q), v in diamond.numbers.items())
    return {"dim": diamond.dim, "cohomology": [list(e) for e in entries]}


def diamond_from_json(obj: dict) -> HodgeDiamond:
    return HodgeDiamond(obj["dim"], {(p, q): v for _k, p, q, v in obj["cohomology"]})


def mhs_to_json(mhs: WeightGradedMHS) -> dict:
    return {
        "degree": mhs.degree,
        "pieces": [
            {"weight": w, "dims": [[p, q, v] for (p, q), v in sorted(dims.items())]}
            for w, dims in mhs.pieces
        ],
    }


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, integer lists kept on one line."""
    text = json.dumps(obj, sort_keys=True, indent=2)
    text = _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def rows_to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def diamond_to_csv(diamond: HodgeDiamond) -> str:
    rows = sorted((p + q, p, q, v) for (p, q), v in diamond.numbers.items())
    return rows_to_csv(["k", "p", "q", "value"], rows)


def mhs_to_csv(mhs: WeightGradedMHS) -> str:
    rows = [(w, p, q, v) for w, dims in mhs.pieces for (p, q), v in sorted(dims.items())]
    return rows_to_csv(["weight", "p", "q", "value"], rows)


def format_dims(dims: BigradedDims) -> str:
    if not dims:
        return "0"
    return " ".join(f"h^{{{p},{q}}}={v}" for (p, q), v in sorted(dims.items(), reverse=True))


# ambient files


def _int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"expected an integer, got {value!r}", field=field)
    return value


def ambient_from_obj(obj) -> AmbientSpec:
    if not isinstance(obj, dict):
        raise SchemaError("top level must be an object")
    kind = obj.get("kind")
    if kind == "projective":
        return ProjectiveSpace(_int(obj.get("dim"), "dim"))
    if kind != "custom":
        raise SchemaError(f"unknown kind {kind!r}", field="kind")
    missing = [k for k in ("id", "dim", "degree", "sections") if k not in obj]
    if missing:
        raise SchemaError(f"missing {', '.join(missing)}", field=missing[0])
    extra = sorted(set(obj) - {"kind", "id", "dim", "degree", "sections"})
    if extra:
        raise SchemaError(f"unexpected key {extra[0]!r}", field=extra[0])
    ident = obj["id"]
    if not isinstance(ident, str) or not ident or "+" in ident:
        raise SchemaError("id must be a nonempty string without '+'", field="id")
    dim = _int(obj["dim"], "dim")
    if dim < 1:
        raise SchemaError("dim must be positive", field="dim")
    degree = _int(obj["degree"], "degree")
    sections = obj["sections"]
    if not isinstance(sections, list) or len(sections) != dim + 1:
        raise SchemaError(f"sections must be a list of {dim + 1} tables", field="sections")
    diamonds = []
    for r, table in enumerate(sections):
        where = f"sections[{r}]"
        if not isinstance(table, list):
            raise SchemaError("expected a list of [k, p, q, value]", field=where)
        entries = {}
        for i, quad in enumerate(table):
            f = f"{where}[{i}]"
            if not isinstance(quad, list) or len(quad) != 4:
                raise SchemaError("expected [k, p, q, value]", field=f)
            k, p, q, v = (_int(x, f) for x in quad)
            if p + q != k:
                raise SchemaError(f"p + q = {p + q} but k = {k}", field=f)
            if v < 0:
                raise SchemaError("negative dimension", field=f)
            if (p, q) in entries:
                raise SchemaError(f"duplicate entry ({p},{q})", field=f)
            entries[(p, q)] = v
        try:
            diamonds.append(HodgeDiamond(dim - r, entries))
        except ValueError as exc:
            raise SchemaError(str(exc), field=where) from None
    return CustomAmbient(ident, dim, tuple(diamonds), declared_degree=degree)


def ambient_to_obj(ambient: AmbientSpec) -> dict:
    if isinstance(ambient, ProjectiveSpace):
        return {"kind": "projective", "dim": ambient.N}
    if ambient.offset:
        raise SpecError(f"{ambient.id} is a linear section of {ambient.root}; serialize the root instead")
    return {
        "kind": "custom",
        "id": ambient.id,
        "dim": ambient.dim,
        "degree": ambient.declared_degree if ambient.declared_degree is not None else ambient.degree,
        "sections": [diamond_to_json(s)["cohomology"] for s in ambient.sections],
    }


def loads_ambient(text: str) -> AmbientSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    return ambient_from_obj(obj)


def load_ambient(path: str | Path) -> AmbientSpec:
    return loads_ambient(Path(path).read_text(encoding="utf-8"))


def dumps_ambient(ambient: AmbientSpec) -> str:
    return dumps(ambient_to_obj(ambient))
