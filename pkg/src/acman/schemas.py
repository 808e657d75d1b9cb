"""Published JSON schemas for descriptor files and CLI output documents."""

_INT = {"type": "integer"}

CHERN_TABLE_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"const": "chern_table"},
        "name": {"type": "string"},
        "m": {"type": "integer", "minimum": 1},
        "closed": {"type": "boolean"},
        "entries": {
            "type": "object",
            "propertyNames": {"pattern": r"^\[\s*\d+(\s*,\s*\d+)*\s*\]$"},
            "additionalProperties": _INT,
        },
    },
    "required": ["kind", "m"],
    "additionalProperties": False,
}

FOUR_MANIFOLD_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"const": "four_manifold"},
        "name": {"type": "string"},
        "closed": {"type": "boolean"},
        "Q": {"type": "array", "items": {"type": "array", "items": _INT}},
        "c1": {"type": "array", "items": _INT},
        "euler": _INT,
        "torsion_free": {"type": "boolean"},
    },
    "required": ["kind", "Q", "c1", "euler", "torsion_free"],
    "additionalProperties": False,
}

DESCRIPTOR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "acman manifold descriptor",
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": ["chern_table", "four_manifold"]}},
    "if": {"properties": {"kind": {"const": "chern_table"}}},
    "then": CHERN_TABLE_SCHEMA,
    "else": FOUR_MANIFOLD_SCHEMA,
}

_NULLABLE_INT = {"type": ["integer", "null"]}

LEDGER_ENTRY_SCHEMA = {
    "type": "object",
    "properties": {
        "space": {"type": "string"},
        "fact": {"type": ["integer", "string"]},
        "role": {"type": "string"},
    },
    "required": ["space", "fact", "role"],
    "additionalProperties": False,
}

DECISION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "acman embedding decision",
    "type": "object",
    "properties": {
        "verdict": {"enum": ["Yes", "No", "Undetermined"]},
        "target_dim": _INT,
        "I": _NULLABLE_INT,
        "double_points": {"type": ["integer", "null"], "minimum": 0},
        "normal_euler": _NULLABLE_INT,
        "regular_homotopy_class": _NULLABLE_INT,
        "ledger": {"type": "array", "items": LEDGER_ENTRY_SCHEMA},
        "citations": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["verdict", "target_dim", "I", "double_points", "normal_euler", "ledger", "citations"],
    "additionalProperties": False,
}

SEGRE_SCHEMA = {
    "type": "object",
    "properties": {
        "k": _INT,
        "polynomial": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"partition": {"type": "array", "items": _INT}, "coefficient": _INT},
                "required": ["partition", "coefficient"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["k", "polynomial", "terms"],
    "additionalProperties": False,
}

BOTT_SCHEMA = {
    "type": "object",
    "properties": {"k": _INT, "n": _INT, "group": {"enum": ["0", "Z", "Z2", "Unknown"]}, "stable": {"type": "boolean"}},
    "required": ["k", "n", "group", "stable"],
    "additionalProperties": False,
}

CATALOG_LIST_SCHEMA = {
    "type": "object",
    "properties": {
        "descriptors": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"name": {"type": "string"}, "kind": {"enum": ["chern_table", "four_manifold"]}},
                "required": ["name", "kind"],
                "additionalProperties": False,
            },
        }
    },
    "required": ["descriptors"],
    "additionalProperties": False,
}

_POINT5 = {"type": "array", "items": {"type": "number"}, "minItems": 5, "maxItems": 5}

VERIFY_SCHEMA = {
    "type": "object",
    "properties": {
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "value": {"type": "number"},
                    "threshold": {"type": "number"},
                },
                "required": ["name", "passed", "value", "threshold"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["passed", "checks"],
    "additionalProperties": False,
}

CRITICAL_SCHEMA = {
    "type": "object",
    "properties": {
        "map": {"type": "string"},
        "n_seeds": _INT,
        "seed": _INT,
        "converged": _INT,
        "points": {"type": "array", "items": {"type": "array", "items": {"type": "number"}}},
    },
    "required": ["map", "n_seeds", "seed", "converged", "points"],
    "additionalProperties": False,
}

FIBER_SAMPLE_SCHEMA = {
    "type": "object",
    "properties": {
        "map": {"type": "string"},
        "target": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
        "seed": _INT,
        "n_starts": _INT,
        "points": {"type": "array", "items": _POINT5},
        "residuals": {"type": "array", "items": {"type": "number"}},
        "start_indices": {"type": "array", "items": _INT},
    },
    "required": ["map", "target", "seed", "n_starts", "points", "residuals", "start_indices"],
    "additionalProperties": False,
}

FIBER_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "map": {"type": "string"},
        "target": {"type": "array", "items": {"type": "number"}},
        "n_starts": _INT,
        "converged": _INT,
        "convergence_rate": {"type": "number"},
        "out": {"type": ["string", "null"]},
        "format": {"enum": ["csv", "json"]},
    },
    "required": ["map", "target", "n_starts", "converged", "convergence_rate", "out", "format"],
    "additionalProperties": False,
}

ERROR_SCHEMA = {
    "type": "object",
    "properties": {"error": {"type": "string"}, "path": {"type": "string"}},
    "required": ["error", "path"],
    "additionalProperties": False,
}
