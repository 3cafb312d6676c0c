"""JSON schema for the machine-readable reports the CLI emits.

Every run produces a single self-describing document; the `results` payload
is command-specific but always an array of objects.
"""

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "wildmono report",
    "type": "object",
    "required": ["schema_version", "tool", "command", "field", "parameters",
                 "results", "passed"],
    "properties": {
        "schema_version": {"type": "integer"},
        "tool": {
            "type": "object",
            "required": ["name", "version"],
            "properties": {
                "name": {"type": "string"},
                "version": {"type": "string"},
            },
        },
        "command": {"type": "string"},
        "field": {
            "type": "object",
            "required": ["p"],
            "properties": {
                "p": {"type": "integer"},
                "m": {"type": "integer"},
            },
        },
        "parameters": {"type": "object"},
        "results": {"type": "array", "items": {"type": "object"}},
        "passed": {"type": "boolean"},
    },
}
