"""Deterministic Blender add-on generation from a validated scaffold spec.

The output is one self-contained script: a settings PropertyGroup holding the
three-level expertise enum, a dispatch operator that gives each button its
composed tooltip, and a sidebar panel whose draw method renders one boxed
section per stage with per-level tool gating. Equal specs produce equal bytes.
"""

from dataclasses import dataclass

from .core import ScaffoldSpec, Tool, ToolKind, canonical_json
from .diagnostics import Diagnostic, Severity, validate


class EmptySpec(ValueError):
    """The spec has no stages, so there is no panel to generate."""


class UnvalidatedSpec(ValueError):
    """The spec still has Error-severity diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        codes = ", ".join(
            f"{d.code} at {d.location}"
            for d in diagnostics
            if d.severity is Severity.ERROR
        )
        super().__init__(f"spec has validation errors: {codes}")
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class AddonManifest:
    panel_idname: str
    stage_count: int
    tool_count: int
    levels_present: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "panel-idname": self.panel_idname,
            "stage-count": self.stage_count,
            "tool-count": self.tool_count,
            "levels-present": list(self.levels_present),
        }


@dataclass(frozen=True)
class EmittedAddon:
    source: str
    manifest: AddonManifest


def emit_manifest(addon: EmittedAddon) -> str:
    """Summary JSON the harness cross-checks without parsing the source."""
    return canonical_json(addon.manifest.to_dict())


_SHORT_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _py(text: str) -> str:
    # ASCII-only double-quoted literal; quotes, newlines, and any unicode in
    # authored text must never break the generated module. Non-BMP codepoints
    # need \U escapes (surrogate-pair \u escapes do not recombine in Python).
    out = ['"']
    for ch in text:
        cp = ord(ch)
        if ch in _SHORT_ESCAPES:
            out.append(_SHORT_ESCAPES[ch])
        elif 0x20 <= cp < 0x7F:
            out.append(ch)
        elif cp <= 0xFF:
            out.append(f"\\x{cp:02x}")
        elif cp <= 0xFFFF:
            out.append(f"\\u{cp:04x}")
        else:
            out.append(f"\\U{cp:08x}")
    out.append('"')
    return "".join(out)


def _level_tuple(tool: Tool) -> str:
    names = [level.canonical_name for level in sorted(tool.visibility)]
    inner = ", ".join(f'"{name}"' for name in names)
    return f"({inner},)" if len(names) == 1 else f"({inner})"


def _prop_target(identifier: str) -> tuple[str, str]:
    """Split a property path into (draw-time target expression, property name)."""
    parts = identifier.split(".")
    if parts[0] == "bpy":
        parts = parts[1:]
    if parts[0] != "context":
        parts = ["context", *parts]
    return ".".join(parts[:-1]), parts[-1]


def _compose_hint(spec: ScaffoldSpec, tool: Tool) -> str:
    concepts = {c.name: c for stage in spec.stages for c in stage.concepts}
    lines: list[str] = []
    if tool.tooltip:
        lines.append(tool.tooltip)
    for tag in tool.concept_tags:
        concept = concepts.get(tag)
        if concept is not None:
            lines.append(f"Concept: {concept.definition}")
    hint = tool.native_hint
    if hint is not None:
        if hint.shortcut:
            lines.append(f"Shortcut: {hint.shortcut}")
        if hint.menu_path:
            lines.append("Menu: " + " > ".join(hint.menu_path))
    return "\n".join(lines)


def emit(spec: ScaffoldSpec) -> EmittedAddon:
    """Generate the add-on script and its manifest for a clean spec.

    The spec must be free of structural validation errors (the catalog rules
    are the CLI's concern); otherwise :class:`UnvalidatedSpec` is raised.
    """
    if not spec.stages:
        raise EmptySpec("spec has no stages")
    diagnostics = validate(spec, None)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        raise UnvalidatedSpec(diagnostics)

    panel = spec.panel
    stages = spec.ordered_stages()
    tools = spec.all_tools()
    pointer = panel.pointer_name
    op_idname = f"{pointer.lower()}.invoke_tool"
    op_class = f"{pointer.upper()}_OT_invoke_tool"

    w = []  # the script, one line per entry

    w.append("# Generated Blender add-on. Do not edit by hand.")
    w.append("")
    w.append("bl_info = {")
    w.append(f"    \"name\": {_py(panel.panel_label)},")
    w.append(f"    \"description\": {_py('Scaffolded panel for: ' + spec.task_title)},")
    w.append("    \"version\": (1, 0, 0),")
    w.append("    \"blender\": (3, 6, 0),")
    w.append(f"    \"location\": {_py('View3D > Sidebar > ' + panel.category)},")
    w.append("    \"category\": \"Interface\",")
    w.append("}")
    w.append("")
    w.append("import bpy")
    w.append("from bpy.props import EnumProperty, PointerProperty, StringProperty")
    w.append("from bpy.types import Operator, Panel, PropertyGroup")
    w.append("")
    w.append("# Composed help text per tool: description, domain concepts, and the")
    w.append("# shortcut / menu path locating the tool in the native interface.")
    w.append("TOOL_HINTS = {")
    for tool in tools:
        w.append(f"    {_py(tool.identifier)}: {_py(_compose_hint(spec, tool))},")
    w.append("}")
    w.append("")
    w.append("")
    w.append(f"class {panel.propgroup_name}(PropertyGroup):")
    w.append("    expertise_level: EnumProperty(")
    w.append("        name=\"Complexity Level\",")
    w.append("        description=\"How much of the toolset the panel reveals\",")
    w.append("        items=(")
    w.append("            (\"BASIC\", \"Basic\", \"Show only the fundamental tools\"),")
    w.append("            (\"INTERMEDIATE\", \"Intermediate\", \"Add refinement and selection aids\"),")
    w.append("            (\"ADVANCED\", \"Advanced\", \"Reveal the complete toolset for this task\"),")
    w.append("        ),")
    w.append("        default=\"BASIC\",")
    w.append("    )")
    w.append("")
    w.append("")
    w.append(f"class {op_class}(Operator):")
    w.append("    \"\"\"Run a scaffolded tool; the button tooltip is the composed hint.\"\"\"")
    w.append("")
    w.append(f"    bl_idname = \"{op_idname}\"")
    w.append("    bl_label = \"Scaffold Tool\"")
    w.append("    bl_options = {\"INTERNAL\"}")
    w.append("")
    w.append("    tool_id: StringProperty(options={\"HIDDEN\"})")
    w.append("    tooltip: StringProperty(options={\"HIDDEN\"})")
    w.append("")
    w.append("    @classmethod")
    w.append("    def description(cls, context, properties):")
    w.append("        return properties.tooltip or None")
    w.append("")
    w.append("    def execute(self, context):")
    w.append("        target = bpy.ops")
    w.append("        for segment in self.tool_id.split(\".\")[2:]:")
    w.append("            target = getattr(target, segment)")
    w.append("        target(\"INVOKE_DEFAULT\")")
    w.append("        return {\"FINISHED\"}")
    w.append("")
    w.append("")
    w.append(f"class {panel.panel_idname}(Panel):")
    w.append(f"    bl_idname = {_py(panel.panel_idname)}")
    w.append(f"    bl_label = {_py(panel.panel_label)}")
    w.append(f"    bl_space_type = {_py(panel.space_type)}")
    w.append(f"    bl_region_type = {_py(panel.region_type)}")
    w.append(f"    bl_category = {_py(panel.category)}")
    w.append("")
    w.append("    @classmethod")
    w.append("    def poll(cls, context):")
    w.append("        return context.active_object is not None")
    w.append("")
    w.append("    def draw(self, context):")
    w.append("        layout = self.layout")
    w.append(f"        settings = context.scene.{pointer}")
    w.append("        level = settings.expertise_level")
    w.append("")
    w.append("        row = layout.row(align=True)")
    w.append("        row.prop(settings, \"expertise_level\", expand=True)")

    for index, stage in enumerate(stages):
        w.append("")
        w.append(f"        # Stage {index + 1} of {len(stages)}")
        w.append("        box = layout.box()")
        w.append(f"        box.label(text={_py(stage.name)})")
        if stage.tools:
            w.append("        shown = False")
        for position, tool in enumerate(stage.tools):
            w.append(f"        if level in {_level_tuple(tool)}:")
            if position > 0:
                w.append("            if shown:")
                w.append("                box.separator()")
            if tool.kind is ToolKind.OPERATOR:
                w.append(
                    f"            tool = box.operator(\"{op_idname}\", "
                    f"text={_py(tool.ui_label)})"
                )
                w.append(f"            tool.tool_id = {_py(tool.identifier)}")
                w.append(f"            tool.tooltip = TOOL_HINTS[{_py(tool.identifier)}]")
            else:
                target, prop_name = _prop_target(tool.identifier)
                w.append(
                    f"            box.prop({target}, {_py(prop_name)}, "
                    f"text={_py(tool.ui_label)})"
                )
            w.append("            shown = True")

    w.append("")
    w.append("")
    w.append("_CLASSES = (")
    w.append(f"    {panel.propgroup_name},")
    w.append(f"    {op_class},")
    w.append(f"    {panel.panel_idname},")
    w.append(")")
    w.append("")
    w.append("")
    w.append("def register():")
    w.append("    for cls in _CLASSES:")
    w.append("        bpy.utils.register_class(cls)")
    w.append(
        f"    bpy.types.Scene.{pointer} = "
        f"PointerProperty(type={panel.propgroup_name})"
    )
    w.append("")
    w.append("")
    w.append("def unregister():")
    w.append(f"    del bpy.types.Scene.{pointer}")
    w.append("    for cls in reversed(_CLASSES):")
    w.append("        bpy.utils.unregister_class(cls)")
    w.append("")
    w.append("")
    w.append("if __name__ == \"__main__\":")
    w.append("    register()")

    source = "\n".join(w) + "\n"
    levels_present = sorted(
        {level for tool in tools for level in tool.visibility}
    )
    manifest = AddonManifest(
        panel_idname=panel.panel_idname,
        stage_count=len(stages),
        tool_count=len(tools),
        levels_present=tuple(level.canonical_name for level in levels_present),
    )
    return EmittedAddon(source=source, manifest=manifest)


__all__ = [
    "AddonManifest",
    "EmittedAddon",
    "EmptySpec",
    "UnvalidatedSpec",
    "emit",
    "emit_manifest",
]
