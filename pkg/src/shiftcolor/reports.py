"""Report plumbing shared by the command-line front end and the tests:
canonical JSON encoding, config hashing, and the manifest envelope.

Reports must be byte-identical across reruns with the same inputs, so the
encoder is fully canonical (sorted keys, fixed indentation, trailing
newline) and nothing time- or host-dependent is ever placed in a report.
Timing, when wanted, belongs on stderr.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from .patterns import PartialColoring
from .radii import Infinity

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"


def to_jsonable(obj: Any) -> Any:
    """Recursively reduce report objects to plain JSON values. Fractions
    render as "p/q", the infinite radius as "inf"; report dataclasses are
    asked for their own JSON form."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Infinity):
        return "inf"
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, PartialColoring):
        return obj.to_json()
    if hasattr(obj, "to_jsonable"):
        return to_jsonable(obj.to_jsonable())
    if hasattr(obj, "to_json") and not isinstance(obj, type):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda v: json.dumps(v, sort_keys=True))
        return items
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    raise TypeError(f"cannot encode {type(obj).__name__} into a report")


def canonical_json_bytes(obj: Any) -> bytes:
    """The one true serialization: sorted keys, two-space indent, UTF-8,
    trailing newline. Byte-identical reports are a hard requirement."""
    text = json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def config_hash(description: Dict[str, Any]) -> str:
    """SHA-256 over the canonical encoding of everything that determines the
    run: command name, parameters, seeds, budgets, and the full contents of
    any input spec files (so a changed file changes the hash even at the
    same path)."""
    return hashlib.sha256(canonical_json_bytes(description)).hexdigest()


def build_manifest(
    command: str,
    params: Dict[str, Any],
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    spec_paths: Optional[list] = None,
    spec_contents: Optional[list] = None,
    output_path: Optional[str] = None,
) -> Dict[str, Any]:
    hashed = {
        "command": command,
        "params": to_jsonable(params),
        "seed": seed,
        "budget": budget,
        "spec_contents": spec_contents or [],
    }
    return {
        "command": command,
        "spec_paths": spec_paths or [],
        "seed": seed,
        "budgets": {"budget": budget},
        "output_path": output_path,
        "tool_version": TOOL_VERSION,
        "config_hash": config_hash(hashed),
    }


def envelope(manifest: Dict[str, Any], payload: Any) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "manifest": manifest,
        "payload": to_jsonable(payload),
    }
