"""Cross-check a generated add-on against its spec and manifest.

The spec JSON and manifest JSON are the file contracts shared with the
compiler side; this module re-reads them independently and compares the
recorded draw tree at every complexity level against the spec's visibility
sets. The result is a report dict: per-level pass/fail plus diffs.
"""

import json
from pathlib import Path

from .loader import LEVELS, LoadedAddon, extract_draw_tree, load_and_register, unregister_addon
from .recorder import DrawTree


def read_spec(spec_path) -> dict:
    data = json.loads(Path(spec_path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "stages" not in data:
        raise ValueError(f"{spec_path}: not a scaffold spec document")
    return data


def spec_tools(spec_doc: dict) -> list[dict]:
    return [tool for stage in spec_doc["stages"] for tool in stage.get("tools", [])]


def expected_identifiers(spec_doc: dict, level: str) -> set[str]:
    """The spec's visibility contract: ids whose visibility lists the level."""
    return {
        tool["identifier"]
        for tool in spec_tools(spec_doc)
        if level in tool.get("visibility", [])
    }


def expected_box_labels(spec_doc: dict) -> list[str]:
    stages = sorted(spec_doc["stages"], key=lambda s: s["ordinal"])
    return [stage["name"] for stage in stages]


def match_recorded_ref(ref: str, spec_ids: set[str]) -> str | None:
    """Map a recorded ref onto a spec identifier.

    Operator items carry the spec identifier verbatim. Property items carry
    the draw-time path, which is the identifier itself for context.* ids and
    gains a leading "context." otherwise.
    """
    if ref in spec_ids:
        return ref
    if ref.startswith("context.") and ref[len("context."):] in spec_ids:
        return ref[len("context."):]
    return None


def diff_level(tree: DrawTree, spec_doc: dict) -> dict:
    spec_ids = {tool["identifier"] for tool in spec_tools(spec_doc)}
    expected = expected_identifiers(spec_doc, tree.level)
    recorded: set[str] = set()
    unexpected: list[str] = []
    for ref in sorted(tree.identifiers()):
        matched = match_recorded_ref(ref, spec_ids)
        if matched is None:
            unexpected.append(ref)
        else:
            recorded.add(matched)
    missing = sorted(expected - recorded)
    unexpected.extend(sorted(recorded - expected))
    ok = not missing and not unexpected
    return {"pass": ok, "diffs": {"missing": missing, "unexpected": unexpected}}


def structural_findings(trees: dict[str, DrawTree], spec_doc: dict,
                        manifest: dict | None, addon: LoadedAddon) -> list[str]:
    findings: list[str] = []
    labels_expected = expected_box_labels(spec_doc)
    for level, tree in trees.items():
        labels = [box.label for box in tree.boxes]
        if labels != labels_expected:
            findings.append(f"{level}: box labels {labels} != spec stages {labels_expected}")
        if len(set(labels)) != len(labels):
            findings.append(f"{level}: duplicate box labels")
        for box in tree.boxes:
            kinds = [item.kind for item in box.items]
            if kinds and (kinds[0] == "separator" or kinds[-1] == "separator"):
                findings.append(f"{level}: separator at box edge in {box.label!r}")
            for first, second in zip(kinds, kinds[1:]):
                if first == second == "separator":
                    findings.append(f"{level}: double separator in {box.label!r}")

    if manifest is not None:
        if manifest.get("panel-idname") not in addon.registered_classes:
            findings.append(
                f"manifest panel-idname {manifest.get('panel-idname')!r} "
                "is not a registered class"
            )
        stage_count = len(spec_doc["stages"])
        if manifest.get("stage-count") != stage_count:
            findings.append(
                f"manifest stage-count {manifest.get('stage-count')} != spec {stage_count}"
            )
        tool_count = len(spec_tools(spec_doc))
        if manifest.get("tool-count") != tool_count:
            findings.append(
                f"manifest tool-count {manifest.get('tool-count')} != spec {tool_count}"
            )
        for level, tree in trees.items():
            boxes = len(tree.boxes)
            if manifest.get("stage-count") != boxes:
                findings.append(
                    f"{level}: drew {boxes} boxes, manifest says {manifest.get('stage-count')}"
                )
    return findings


def run_conformance(addon_path, spec_path, manifest_path=None) -> dict:
    """Load, register, draw at all three levels, compare, unregister."""
    spec_doc = read_spec(spec_path)
    manifest = None
    if manifest_path is not None:
        manifest = json.loads(Path(manifest_path).read_text(encoding="utf-8"))

    addon = load_and_register(addon_path)
    try:
        trees = {level: extract_draw_tree(addon, level) for level in LEVELS}
        levels_report = {level: diff_level(trees[level], spec_doc) for level in LEVELS}
        findings = structural_findings(trees, spec_doc, manifest, addon)
    finally:
        unregister_addon(addon)

    ok = all(entry["pass"] for entry in levels_report.values()) and not findings
    return {
        "addon": str(addon_path),
        "spec": str(spec_path),
        "registered": addon.registered_classes,
        "levels": levels_report,
        "structural-findings": findings,
        "pass": ok,
    }
