"""Emitter: golden stability, visibility faithfulness, escaping, ordering."""

import ast
import re

import pytest
from hypothesis import given, settings, strategies as st

from scaffoldc import (
    ComplexityLevel,
    Concept,
    EmptySpec,
    LEVELS,
    NativeHint,
    Stage,
    ToolKind,
    UnvalidatedSpec,
    emit,
    emit_manifest,
    spec_from_json,
    visible_tools,
)

from helpers import FIXTURES, SPEC_NAMES, make_spec, make_tool

B, I, A = ComplexityLevel.BASIC, ComplexityLevel.INTERMEDIATE, ComplexityLevel.ADVANCED


def load_spec(name):
    return spec_from_json((FIXTURES / "specs" / f"{name}.json").read_text(encoding="utf-8"))


@pytest.mark.parametrize("name", SPEC_NAMES)
def test_emission_matches_checked_in_golden(name):
    addon = emit(load_spec(name))
    golden = (FIXTURES / "golden" / f"{name}.py").read_text(encoding="utf-8")
    assert addon.source == golden


@pytest.mark.parametrize("name", SPEC_NAMES)
def test_manifest_matches_checked_in_golden(name):
    addon = emit(load_spec(name))
    golden = (FIXTURES / "golden" / f"{name}.manifest.json").read_text(encoding="utf-8")
    assert emit_manifest(addon) == golden


def test_emit_twice_gives_identical_bytes(task1_spec):
    assert emit(task1_spec).source == emit(task1_spec).source


def test_task1_box_labels_in_order(task1_spec):
    source = emit(task1_spec).source
    labels = re.findall(r"box\.label\(text=\"([^\"]+)\"\)", source)
    assert labels == ["Marking Seams", "Unwrapping & Editing", "Checking & Visualization"]


def test_three_level_selector_is_emitted(task1_spec):
    source = emit(task1_spec).source
    assert 'row.prop(settings, "expertise_level", expand=True)' in source
    for name, label in [("BASIC", "Basic"), ("INTERMEDIATE", "Intermediate"),
                        ("ADVANCED", "Advanced")]:
        assert f'("{name}", "{label}",' in source


def test_emitted_source_is_valid_python(task1_spec):
    ast.parse(emit(task1_spec).source)


def test_empty_spec_is_rejected():
    spec = make_spec([Stage(name="S", description="d", ordinal=0)])
    object.__setattr__(spec, "stages", ())
    with pytest.raises(EmptySpec):
        emit(spec)


def test_spec_with_validation_errors_is_rejected():
    spec = make_spec([
        Stage(name="One", description="d", ordinal=0, tools=(make_tool("bpy.ops.a.b"),)),
        Stage(name="Two", description="d", ordinal=0, tools=(make_tool("bpy.ops.c.d"),)),
    ])
    with pytest.raises(UnvalidatedSpec) as excinfo:
        emit(spec)
    assert "SC001" in str(excinfo.value)


def test_empty_stage_emits_empty_box():
    spec = load_spec("minimal_empty_stage")
    source = emit(spec).source
    assert source.count("layout.box()") == 1
    assert 'box.label(text="Blocking")' in source
    assert "box.operator" not in source and "box.prop(" not in source
    assert 'row.prop(settings, "expertise_level", expand=True)' in source


def test_manifest_counts_match_brute_force(task1_spec):
    manifest = emit(task1_spec).manifest
    assert manifest.stage_count == len(task1_spec.stages)
    assert manifest.tool_count == sum(len(s.tools) for s in task1_spec.stages)
    assert manifest.panel_idname == task1_spec.panel.panel_idname
    assert list(manifest.levels_present) == ["BASIC", "INTERMEDIATE", "ADVANCED"]


def test_empty_tools_manifest():
    manifest = emit(load_spec("minimal_empty_stage")).manifest
    assert manifest.tool_count == 0
    assert manifest.levels_present == ()


# --- static visibility scan ------------------------------------------------------

_GATE_RE = re.compile(r"^        if level in \(([^)]*)\):$")
_TOOL_ID_RE = re.compile(r"^            tool\.tool_id = \"([^\"]+)\"$")
_PROP_RE = re.compile(r"^            box\.prop\((.+?), \"([^\"]+)\", text=")


def scan_gated_identifiers(source: str) -> dict[str, set[str]]:
    """Independent reading of the draw code: which ids are gated to which levels."""
    gated = {level.canonical_name: set() for level in LEVELS}
    current: list[str] = []
    for line in source.splitlines():
        gate = _GATE_RE.match(line)
        if gate:
            current = [chunk.strip().strip('"') for chunk in gate.group(1).split(",") if chunk.strip()]
            continue
        tool_id = _TOOL_ID_RE.match(line)
        if tool_id:
            for level in current:
                gated[level].add(tool_id.group(1))
            continue
        prop = _PROP_RE.match(line)
        if prop:
            identifier = f"{prop.group(1)}.{prop.group(2)}"
            for level in current:
                gated[level].add(identifier)
    return gated


@pytest.mark.parametrize("name", SPEC_NAMES)
def test_gated_identifiers_equal_visible_tools(name):
    spec = load_spec(name)
    gated = scan_gated_identifiers(emit(spec).source)
    for level in LEVELS:
        expected = {tool.identifier for _, tool in visible_tools(spec, level)}
        assert gated[level.canonical_name] == expected, (name, level.canonical_name)


def test_within_box_tool_order_is_authoring_order(task1_spec):
    source = emit(task1_spec).source
    ids = re.findall(r"tool\.tool_id = \"([^\"]+)\"|box\.prop\((.+?), \"([^\"]+)\", text=", source)
    flattened = [a or f"{b}.{c}" for a, b, c in ids]
    expected = [t.identifier for stage in task1_spec.ordered_stages() for t in stage.tools]
    assert flattened == expected


def test_property_target_heads_are_context_relative():
    from scaffoldc.emitter import _prop_target

    assert _prop_target("context.tool_settings.use_uv_select_sync") == (
        "context.tool_settings", "use_uv_select_sync")
    assert _prop_target("scene.frame_end") == ("context.scene", "frame_end")
    assert _prop_target("bpy.context.scene.frame_end") == ("context.scene", "frame_end")


def test_separators_follow_every_gate_after_the_first(task1_spec):
    # every tool block after a box's first carries the shown-guarded separator
    source = emit(task1_spec).source
    blocks = source.split("box = layout.box()")[1:]
    for block in blocks:
        gates = block.count("if level in (")
        separators = block.count("box.separator()")
        assert separators == max(0, gates - 1)


# --- injection safety -------------------------------------------------------------


def _stub_bpy_modules():
    """A throwaway bpy good enough to import, register, and draw an add-on."""
    import sys
    import types

    bpy = types.ModuleType("bpy")
    props = types.ModuleType("bpy.props")
    btypes = types.ModuleType("bpy.types")

    def prop_stub(**options):
        return options

    for factory in ("EnumProperty", "PointerProperty", "StringProperty"):
        setattr(props, factory, prop_stub)

    class _Base:
        pass

    class _Scene:
        pass

    btypes.PropertyGroup = type("PropertyGroup", (), {})
    btypes.Panel = type("Panel", (), {})
    btypes.Operator = type("Operator", (), {})
    btypes.Scene = _Scene

    registry = []
    utils = types.SimpleNamespace(
        register_class=registry.append,
        unregister_class=registry.remove,
    )
    bpy.props = props
    bpy.types = btypes
    bpy.utils = utils
    bpy.context = _Base()
    saved = {name: sys.modules.get(name) for name in ("bpy", "bpy.props", "bpy.types")}
    sys.modules.update({"bpy": bpy, "bpy.props": props, "bpy.types": btypes})
    return registry, saved


class _StubLayout:
    def __getattr__(self, name):
        def call(*args, **kwargs):
            return _StubLayout()

        return call

    def __setattr__(self, name, value):
        pass


_adversarial = st.text(
    alphabet=st.characters(
        blacklist_categories=("Cs",),  # no lone surrogates
    ),
    min_size=1,
    max_size=40,
).filter(lambda s: s.strip())


@settings(max_examples=80, deadline=None)
@given(name=_adversarial, label=_adversarial, tooltip=_adversarial, definition=_adversarial)
def test_adversarial_strings_never_break_the_module(name, label, tooltip, definition):
    import sys
    import types

    spec = make_spec([
        Stage(
            name=name, description="d", ordinal=0,
            concepts=(Concept(name="c", definition=definition,
                              related_tool_ids=("bpy.ops.a.b",)),),
            tools=(
                make_tool("bpy.ops.a.b", label=label, tooltip=tooltip,
                          concept_tags=("c",),
                          native_hint=NativeHint(shortcut='Ctrl+"',
                                                 menu_path=("A > B", 'Quote"Path'))),
                make_tool("context.scene.frame_end", kind=ToolKind.PROPERTY, label=label),
            ),
        )
    ], panel_suffix="inj")
    source = emit(spec).source
    module = ast.parse(source)  # must stay parseable
    compile(module, "<emitted>", "exec")

    # the adversarial text must round-trip through the literal it landed in
    hints = next(
        node for node in module.body
        if isinstance(node, ast.Assign) and node.targets[0].id == "TOOL_HINTS"
    )
    assert tooltip in ast.literal_eval(hints.value)["bpy.ops.a.b"]

    # and the module must import, register, draw, and unregister
    registry, saved = _stub_bpy_modules()
    try:
        namespace = types.ModuleType("adversarial_addon")
        exec(compile(source, "<emitted>", "exec"), namespace.__dict__)
        namespace.register()
        assert len(registry) == 3

        class _Settings:
            expertise_level = "ADVANCED"  # drive every gated branch

        class _Scene:
            def __getattr__(self, attr):
                return _Settings()

        class _Ctx:
            scene = _Scene()
            active_object = object()

            def __getattr__(self, attr):
                return _StubLayout()

        panel_class = namespace.__dict__[spec.panel.panel_idname]
        panel = panel_class()
        panel.layout = _StubLayout()
        panel.draw(_Ctx())
        namespace.unregister()
        assert registry == []
    finally:
        for mod_name, mod in saved.items():
            if mod is None:
                sys.modules.pop(mod_name, None)
            else:
                sys.modules[mod_name] = mod
