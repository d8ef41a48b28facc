"""JSON schemas for CLI inputs, and helpers to decode validated documents."""

from __future__ import annotations

import jsonschema

from .errors import InvalidInputError

NUMBER = {"type": "number"}
COMPLEX = {"oneOf": [NUMBER, {"type": "array", "items": NUMBER, "minItems": 2, "maxItems": 2}]}
VEC3 = {"type": "array", "items": NUMBER, "minItems": 3, "maxItems": 3}

AK_GERM = {
    "type": "object",
    "properties": {
        "type": {"const": "Ak"},
        "k": {"type": "integer", "minimum": 1},
        "coeffs": {"type": "array", "items": {"type": "array", "items": COMPLEX}},
    },
    "required": ["type", "k", "coeffs"],
}

ROOT_SYSTEM = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["A", "D", "E"]},
        "rank": {"type": "integer", "minimum": 1},
    },
    "required": ["kind", "rank"],
}

LIFTED_GERM = {
    "type": "object",
    "properties": {
        "type": {"const": "lifted"},
        "root_system": ROOT_SYSTEM,
        "cover_order": {"type": "integer", "minimum": 1},
        "series": {"type": "array", "minItems": 1, "items": {"type": "array", "items": COMPLEX}},
        "kahler_series": {"type": "array", "items": {"type": "array", "items": NUMBER}},
        "sample_radius": {"type": "number", "exclusiveMinimum": 0},
    },
    "required": ["type", "root_system", "cover_order", "series"],
}

GERM = {"oneOf": [AK_GERM, LIFTED_GERM]}

PARAMETER = {
    "type": "object",
    "properties": {
        "root_system": ROOT_SYSTEM,
        "zeta_r": {"type": "array", "items": NUMBER},
        "zeta_c": {"type": "array", "items": COMPLEX},
    },
    "required": ["root_system", "zeta_r", "zeta_c"],
}

GH_CONFIG = {
    "type": "object",
    "properties": {
        "points": {"type": "array", "minItems": 1, "items": VEC3},
        "string_direction": VEC3,
    },
    "required": ["points"],
}

POLYGON_CONFIG = {
    "type": "object",
    "properties": {
        "d": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer"},
        "polygons": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"height": NUMBER, "radius": NUMBER, "phase": NUMBER},
                "required": ["height", "radius"],
            },
        },
        "segments": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        },
    },
    "required": ["d", "n", "polygons"],
}

DIMS = {
    "type": "object",
    "properties": {"d": {"type": "integer", "minimum": 1}, "n": {"type": "integer", "minimum": 1}},
    "required": ["d", "n"],
}

CONIC = {
    "type": "object",
    "properties": {"eps1": COMPLEX, "eps2": COMPLEX, "delta": {"type": "array", "items": COMPLEX, "minItems": 2, "maxItems": 2}},
    "required": ["eps1", "eps2"],
}

INVENTORY = {
    "type": "object",
    "properties": {
        "r": {"type": "integer", "minimum": 1},
        "weights": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
    },
    "required": ["r", "weights"],
}

CLASSIFY_INPUT = {"oneOf": [PARAMETER, AK_GERM, LIFTED_GERM]}


class SchemaError(InvalidInputError):
    """Input document does not match its schema; ``field`` points at the offending entry."""

    def __init__(self, message: str, field: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def validate(doc, schema) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        best = jsonschema.exceptions.best_match([e]) or e
        raise SchemaError(best.message, best.json_path) from None


def complex_value(x) -> complex:
    return complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x)
