"""Regenerate an API-catalog snapshot from a live Blender.

Only works inside a real Blender process (`blender --background --python`);
everywhere else it raises :class:`EnvironmentMissing` and CI keeps using the
checked-in snapshot. Output follows the snapshot contract: a JSON array of
{"identifier", "kind", "description"?} objects, sorted by identifier.
"""

import json
import re
from pathlib import Path

IDENTIFIER_RE = re.compile(r"^[a-z_][a-z0-9_]*(?:\.[a-z_][a-z0-9_]*)+$")


class EnvironmentMissing(RuntimeError):
    """No real Blender is available in this process."""


def _real_bpy():
    try:
        import bpy
    except ImportError:
        raise EnvironmentMissing("bpy is not importable; run inside Blender") from None
    app = getattr(bpy, "app", None)
    if app is None or not hasattr(app, "version"):
        raise EnvironmentMissing("the importable bpy is not a real Blender runtime")
    return bpy


def collect_entries(bpy) -> list[dict]:
    entries: dict[str, dict] = {}

    for category in dir(bpy.ops):
        if category.startswith("_"):
            continue
        ops_module = getattr(bpy.ops, category)
        for op_name in dir(ops_module):
            if op_name.startswith("_"):
                continue
            identifier = f"bpy.ops.{category}.{op_name}"
            if not IDENTIFIER_RE.match(identifier):
                continue
            description = ""
            try:
                description = getattr(ops_module, op_name).get_rna_type().description or ""
            except Exception:
                pass
            entry = {"identifier": identifier, "kind": "Operator"}
            if description:
                entry["description"] = description
            entries[identifier] = entry

    holders = [
        (bpy.types.Scene, "context.scene"),
        (bpy.types.ToolSettings, "context.tool_settings"),
    ]
    for holder, prefix in holders:
        for prop in holder.bl_rna.properties:
            if prop.identifier == "rna_type":
                continue
            identifier = f"{prefix}.{prop.identifier}"
            if not IDENTIFIER_RE.match(identifier):
                continue
            entry = {"identifier": identifier, "kind": "Property"}
            if prop.description:
                entry["description"] = prop.description
            entries[identifier] = entry

    return [entries[key] for key in sorted(entries)]


def regenerate_catalog(out_path) -> Path:
    """Write the snapshot; returns the path. Raises EnvironmentMissing headless."""
    bpy = _real_bpy()
    out = Path(out_path)
    out.write_text(
        json.dumps(collect_entries(bpy), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return out
