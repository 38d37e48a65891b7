"""JSON Schemas (draft 2020-12) for every document the command line reads or writes.

Kept as plain dictionaries so the package itself needs no validator; the
test-suite checks CLI output against them with ``jsonschema``.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
INDEX = {"type": "integer", "minimum": 0}
MESSAGE = {"type": "array", "prefixItems": [INDEX, INDEX], "items": False, "minItems": 2}
MESSAGES = {"type": "array", "items": MESSAGE}

TOPOLOGY = {
    "type": "object",
    "required": ["sources", "destinations", "edges"],
    "properties": {
        "sources": INDEX,
        "destinations": INDEX,
        "edges": {"type": "array", "items": MESSAGE},
    },
    "additionalProperties": False,
}

MESSAGE_SET = MESSAGES

RATES = {
    "oneOf": [
        {"type": "array", "items": RATIONAL},
        {
            "type": "array",
            "items": {"type": "array", "prefixItems": [INDEX, INDEX, RATIONAL], "items": False, "minItems": 3},
        },
    ]
}

LAYOUT = {
    "type": "object",
    "required": ["source_order", "destination_order"],
    "properties": {
        "source_order": {"type": "array", "items": INDEX},
        "destination_order": {"type": "array", "items": INDEX},
    },
    "additionalProperties": False,
}

CYCLE = {
    "type": "object",
    "required": ["sources", "destinations"],
    "properties": {
        "sources": {"type": "array", "items": INDEX, "minItems": 3},
        "destinations": {"type": "array", "items": INDEX, "minItems": 3},
        "length": {"type": "integer", "minimum": 6},
    },
    "additionalProperties": False,
}

REGION = {
    "type": "object",
    "required": ["messages", "inequalities", "chordal"],
    "properties": {
        "messages": MESSAGES,
        "inequalities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["clique", "bound"],
                "properties": {"clique": MESSAGES, "bound": {"const": "1"}},
                "additionalProperties": False,
            },
        },
        "chordal": {"type": "boolean"},
        "warning": {"type": "string"},
        "vertices": {"type": "array", "items": {"type": "array", "items": RATIONAL}},
        "integral": {"type": "boolean"},
    },
    "additionalProperties": False,
}

SCHEDULE = {
    "type": "object",
    "required": ["slots", "total_weight"],
    "properties": {
        "slots": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["messages", "weight"],
                "properties": {"messages": MESSAGES, "weight": RATIONAL},
                "additionalProperties": False,
            },
        },
        "total_weight": RATIONAL,
        "over_delivery": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [INDEX, INDEX, RATIONAL], "items": False},
        },
    },
    "additionalProperties": False,
}

INFEASIBLE = {
    "type": "object",
    "required": ["error", "chordal", "in_clique_region", "min_total_weight", "gap"],
    "properties": {
        "error": {"const": "infeasible"},
        "chordal": {"type": "boolean"},
        "in_clique_region": {"type": "boolean"},
        "min_total_weight": RATIONAL,
        "gap": RATIONAL,
    },
    "additionalProperties": False,
}

CERTIFICATE = {
    "type": "object",
    "required": [
        "cycle", "n", "parity", "messages", "claimed_tuple", "claimed_source",
        "claimed_sum", "orthogonal_max_sum", "gap",
    ],
    "properties": {
        "cycle": CYCLE,
        "n": {"type": "integer", "minimum": 3},
        "parity": {"enum": ["odd", "even"]},
        "messages": MESSAGES,
        "claimed_tuple": {"type": "array", "items": RATIONAL},
        "claimed_source": {"enum": ["multicast", "alignment"]},
        "claimed_sum": RATIONAL,
        "orthogonal_max_sum": RATIONAL,
        "gap": RATIONAL,
        "claimed_tuple_in_clique_region": {"type": "boolean"},
        "alternative_claim": {
            "type": "object",
            "required": ["source", "sum", "verified"],
            "properties": {"source": {"type": "string"}, "sum": RATIONAL, "verified": {"const": False}},
        },
    },
    "additionalProperties": False,
}

NO_GAP = {
    "type": "object",
    "required": ["error", "n", "claimed_sum", "orthogonal_max_sum"],
    "properties": {
        "error": {"const": "no_gap"},
        "n": {"type": "integer"},
        "claimed_sum": RATIONAL,
        "orthogonal_max_sum": RATIONAL,
    },
    "additionalProperties": False,
}

VERIFICATION_REPORT = {
    "type": "object",
    "required": ["status"],
    "properties": {
        "status": {"enum": ["pass", "fail", "not applicable"]},
        "checked_cliques": INDEX,
        "counterexample": MESSAGES,
        "reason": {"type": "string"},
        "witness": CYCLE,
        "source_convex": {"type": "boolean"},
        "destination_convex": {"type": "boolean"},
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "required": ["clique_acyclicity"],
    "properties": {"clique_acyclicity": VERIFICATION_REPORT, "convexity": VERIFICATION_REPORT},
    "additionalProperties": False,
}

ANALYSIS_REPORT = {
    "type": "object",
    "required": ["chordal", "conflict_stats", "region"],
    "properties": {
        "chordal": {"type": "boolean"},
        "witness": CYCLE,
        "conflict_stats": {
            "type": "object",
            "required": [
                "vertices", "edges", "clique_count", "clique_number",
                "independence_number", "chromatic_number",
            ],
            "additionalProperties": INDEX,
        },
        "region": {
            "type": "object",
            "required": ["inequalities", "valid_capacity_region"],
            "properties": {"inequalities": INDEX, "valid_capacity_region": {"type": "boolean"}},
            "additionalProperties": False,
        },
        "certificate": {"oneOf": [CERTIFICATE, {
            "type": "object", "required": ["error"], "properties": {"error": {"type": "string"}},
            "additionalProperties": False,
        }]},
        "symmetric_capacity": RATIONAL,
        "sum_capacity": RATIONAL,
    },
    "if": {"properties": {"chordal": {"const": False}}},
    "then": {"required": ["witness"], "not": {"required": ["symmetric_capacity"]}},
    "else": {"not": {"required": ["witness"]}, "required": ["symmetric_capacity", "sum_capacity"]},
    "additionalProperties": False,
}

ALL = {
    "topology": TOPOLOGY,
    "message_set": MESSAGE_SET,
    "rates": RATES,
    "layout": LAYOUT,
    "region": REGION,
    "schedule": SCHEDULE,
    "infeasible": INFEASIBLE,
    "certificate": CERTIFICATE,
    "no_gap": NO_GAP,
    "verification_report": VERIFICATION_REPORT,
    "verify": VERIFY,
    "analysis_report": ANALYSIS_REPORT,
}
