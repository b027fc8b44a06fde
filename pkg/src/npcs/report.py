"""Self-describing report documents written by the CLI.

A document embeds the fully resolved configuration (defaults included),
so re-running it through :func:`npcs.cli.execute` reproduces the document
byte for byte; the only volatile part lives under the single "timestamp"
key, which comparisons drop.
"""

from __future__ import annotations

import datetime
import json

SCHEMA_VERSION = 1
TOOL_NAME = "npcs"


def build_document(command: str, config: dict, results: dict,
                   version: str, elapsed_seconds: float | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "version": version,
        "command": command,
        "config": config,
        "results": results,
        "timestamp": {
            "created_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "elapsed_seconds": elapsed_seconds,
        },
    }


def _json_default(obj):
    # numpy scalars/arrays may leak into results; normalize them
    if hasattr(obj, "item") and not hasattr(obj, "__len__"):
        return obj.item()
    if hasattr(obj, "tolist"):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def _dumps(obj) -> str:
    return json.dumps(
        obj, indent=2, sort_keys=True, allow_nan=False, default=_json_default
    )


def dump_document(doc: dict, path=None) -> str:
    text = _dumps(doc) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def load_document(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def strip_volatile(doc: dict) -> dict:
    return {k: v for k, v in doc.items() if k != "timestamp"}


def documents_equal(a: dict, b: dict) -> bool:
    """Byte-level equality after dropping the volatile timestamp field."""
    return _dumps(strip_volatile(a)) == _dumps(strip_volatile(b))
