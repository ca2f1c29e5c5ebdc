"""JSON emission with round-trippable floats and schema-checked ingestion."""

from __future__ import annotations

import json
import math

import jsonschema

from .errors import DomainError


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite number {x!r}")
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _emit(obj, indent: int, level: int, out: list[str]) -> None:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for n, (k, v) in enumerate(obj.items()):
            out.append(f"{pad}{json.dumps(str(k))}: ")
            _emit(v, indent, level + 1, out)
            out.append(",\n" if n < len(obj) - 1 else "\n")
        out.append(end + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            out.append("[")
            out.append(", ".join(_fmt_float(v) if isinstance(v, float) else str(v) for v in obj))
            out.append("]")
            return
        out.append("[\n")
        for n, v in enumerate(obj):
            out.append(pad)
            _emit(v, indent, level + 1, out)
            out.append(",\n" if n < len(obj) - 1 else "\n")
        out.append(end + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Serialize with every float written at 17 significant digits."""
    out: list[str] = []
    _emit(obj, indent, 0, out)
    return "".join(out) + "\n"


_num = {"type": "number"}
_pos = {"type": "number", "exclusiveMinimum": 0}
_triple_pos = {"type": "array", "items": _pos, "minItems": 3, "maxItems": 3}
_triple = {"type": "array", "items": _num, "minItems": 3, "maxItems": 3}

HEXAGON_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "string"},
        "half_long": _triple_pos,
        "alphas": _triple_pos,
        "d": _pos,
    },
    "anyOf": [{"required": ["half_long"]}, {"required": ["alphas", "d"]}],
}

LAMBDA_SCHEMA = {
    "type": "object",
    "properties": {"lambda": _triple_pos},
    "required": ["lambda"],
}

_edge = {
    "type": "array",
    "prefixItems": [{"type": "string"}, {"type": "integer", "minimum": 0, "maximum": 2}],
    "minItems": 2,
    "maxItems": 2,
}

SURFACE_SCHEMA = {
    "type": "object",
    "properties": {
        "hexagons": {"type": "array", "items": {**HEXAGON_SCHEMA, "required": ["id"]}, "minItems": 1},
        "gluings": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"a": _edge, "b": _edge, "reversed": {"type": "boolean"}},
                "required": ["a", "b"],
            },
        },
        "allow_free": {"type": "boolean"},
    },
    "required": ["hexagons", "gluings"],
}


class SchemaError(Exception):
    """Input is not valid JSON or does not match the expected schema."""


def load(text: str, schema: dict):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    try:
        jsonschema.validate(obj, schema, cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"schema violation at {path}: {exc.message}") from exc
    return obj
