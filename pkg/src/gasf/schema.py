"""JSON schema for the report emitted by ``gasf springer report``."""

from __future__ import annotations

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_VECTOR = {"type": "array", "items": _RATIONAL}
_TAG = {"enum": ["THEOREM", "CONJECTURAL", "COMPANION", "UNKNOWN"]}

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "FiberReport",
    "type": "object",
    "required": ["nonempty", "datum", "lambda", "newton", "certified", "validated", "warnings"],
    "properties": {
        "nonempty": {"type": "boolean"},
        "datum": {"type": "string"},
        "lambda": _VECTOR,
        "newton": _VECTOR,
        "certified": {"type": "boolean"},
        "validated": {"type": "boolean"},
        "warnings": {"type": "array", "items": {"type": "string"}},
        "mu_star": _VECTOR,
        "d": _RATIONAL,
        "r": _RATIONAL,
        "c": {"type": "integer", "minimum": 0},
        "d_lambda": _RATIONAL,
        "dim_regular": _RATIONAL,
        "dim_total": {"anyOf": [_RATIONAL, {"const": "UNKNOWN"}]},
        "dim_total_tag": _TAG,
        "dim_total_companion": _RATIONAL,
        "orbit_count": {"type": "integer", "minimum": 1},
        "orbit_count_tag": _TAG,
        "regular_orbit_bound": {"type": "integer", "minimum": 1},
        "regular_bound_exact": {"type": "boolean"},
        "zero_dimensional": {"type": "boolean"},
        "provenance": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "if": {"properties": {"nonempty": {"const": True}}},
    "then": {"required": ["mu_star", "d", "r", "c", "d_lambda", "dim_regular", "dim_total",
                          "dim_total_tag", "orbit_count", "orbit_count_tag",
                          "regular_orbit_bound", "regular_bound_exact", "zero_dimensional",
                          "provenance"]},
    "additionalProperties": False,
}

ERROR_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Error",
    "type": "object",
    "required": ["error", "kind", "message"],
    "properties": {
        "error": {"type": "string"},
        "kind": {"enum": ["input", "domain"]},
        "message": {"type": "string"},
    },
    "additionalProperties": False,
}
