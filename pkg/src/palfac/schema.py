"""JSON Schemas (draft 2020-12) for the machine-readable CLI outputs."""

FACTORIZATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "factorization",
    "type": "object",
    "required": ["mode", "source_length", "factors", "residue", "stalled_at"],
    "properties": {
        "mode": {"enum": ["z", "c", "pz", "pc"]},
        "source_length": {"type": "integer", "minimum": 1},
        "alphabet": {"type": "integer", "minimum": 1},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["start", "len", "text", "certified"],
                "properties": {
                    "start": {"type": "integer", "minimum": 0},
                    "len": {"type": "integer", "minimum": 1},
                    "text": {"type": "string"},
                    "certified": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "residue": {"type": "string"},
        "stalled_at": {"type": ["integer", "null"], "minimum": 0},
        "certificate": {"type": "string"},
    },
    "additionalProperties": False,
}

GENERATED_WORD = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "generated word",
    "type": "object",
    "required": ["family", "length", "alphabet", "word"],
    "properties": {
        "family": {"type": "object", "required": ["kind"]},
        "length": {"type": "integer", "minimum": 1},
        "alphabet": {"type": "integer", "minimum": 1},
        "word": {"type": "string"},
    },
    "additionalProperties": False,
}

SINGULAR_ROW = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "p-singular word",
    "type": "object",
    "required": ["m", "n", "length", "word"],
    "properties": {
        "m": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": -1},
        "length": {"type": "integer", "minimum": 0},
        "word": {"type": "string"},
    },
    "additionalProperties": False,
}

CHECK_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "check report",
    "type": "object",
    "required": ["name", "parameters", "passed", "counterexample", "elapsed"],
    "properties": {
        "name": {"type": "string"},
        "parameters": {"type": "object"},
        "passed": {"type": "boolean"},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["location", "expected", "actual"]},
            ]
        },
        "elapsed": {"type": "number", "minimum": 0},
        "notes": {"type": "object"},
    },
    "if": {"properties": {"passed": {"const": False}}},
    "then": {"properties": {"counterexample": {"type": "object"}}},
    "additionalProperties": False,
}

BENCH_ROW = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "benchmark row",
    "type": "object",
    "required": ["window", "mode", "engine", "seconds"],
    "properties": {
        "window": {"type": "integer", "minimum": 1},
        "mode": {"enum": ["z", "c", "pz", "pc"]},
        "engine": {"enum": ["naive", "indexed"]},
        "seconds": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "factorize": FACTORIZATION,
    "gen": GENERATED_WORD,
    "singular": SINGULAR_ROW,
    "verify": CHECK_REPORT,
    "bench": BENCH_ROW,
}
