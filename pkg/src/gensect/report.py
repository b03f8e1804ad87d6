"""Machine-readable report envelopes.

Identical inputs must produce byte-identical output: keys are sorted, lists
carry an explicit deterministic order, there are no timestamps, and the
schema is versioned.  The JSON schema is documented in the README.
"""

from __future__ import annotations

import json

SCHEMA_VERSION = "1.0"
TOOL_VERSION = "0.1.0"


def envelope(command: str, result: dict) -> dict:
    """Wrap a result payload with the command echo and version stamps."""
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "gensect", "version": TOOL_VERSION},
        "command": command,
        "result": result,
    }


def to_json(payload: dict) -> str:
    """Canonical JSON rendering: sorted keys, two-space indent, ASCII."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
