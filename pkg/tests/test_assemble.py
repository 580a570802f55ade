"""assemble_spec: suggestions + stage outlines into a structurally sound spec."""

import pytest

from scaffoldc import (
    ComplexityLevel,
    Severity,
    StageKeyMismatch,
    StageOutline,
    ToolKind,
    ToolSuggestion,
    assemble_spec,
    default_visibility,
    validate,
)

from helpers import make_panel

B, I, A = ComplexityLevel.BASIC, ComplexityLevel.INTERMEDIATE, ComplexityLevel.ADVANCED


def suggestion(identifier, kind=ToolKind.OPERATOR, expertise=B, raw="BEGINNER",
               rationale="why", context="Edit Mode"):
    return ToolSuggestion(
        identifier=identifier,
        kind=kind,
        rationale=rationale,
        context=context,
        expertise_raw=raw,
        expertise=expertise,
    )


STAGES = [
    StageOutline("Marking Seams", "Define the cuts."),
    StageOutline("Unwrapping", "Flatten the mesh."),
    StageOutline("Checking", "Inspect the result."),
]


def test_three_stages_one_suggestion_each():
    spec = assemble_spec(
        "UV unwrap a cube",
        STAGES,
        {
            "Marking Seams": [suggestion("bpy.ops.mesh.mark_seam")],
            "Unwrapping": [suggestion("bpy.ops.uv.unwrap")],
            "Checking": [suggestion("bpy.ops.uv.select_overlap", expertise=I, raw="INTERMEDIATE")],
        },
        make_panel("asm"),
    )
    assert [s.ordinal for s in spec.stages] == [0, 1, 2]
    assert [s.name for s in spec.stages] == [s.name for s in STAGES]
    assert len(spec.all_tools()) == 3
    assert spec.task_title == "UV unwrap a cube"


def test_built_tools_use_default_visibility_and_derived_labels():
    spec = assemble_spec(
        "task",
        STAGES[:1],
        {"Marking Seams": [suggestion("bpy.ops.mesh.mark_seam"),
                           suggestion("context.scene.frame_end", kind=ToolKind.PROPERTY,
                                      expertise=A, raw="EXPERT")]},
        make_panel("asm"),
    )
    mark, frame = spec.stages[0].tools
    assert mark.ui_label == "Mark Seam"
    assert mark.visibility == default_visibility(B)
    assert mark.native_hint is None
    assert mark.tooltip == "why"
    assert mark.context_requirements == ("Edit Mode",)
    assert frame.ui_label == "Frame End"
    assert frame.visibility == {A}


def test_stage_with_no_suggestions_is_retained_and_flagged_downstream():
    spec = assemble_spec("task", STAGES, {"Unwrapping": [suggestion("bpy.ops.uv.unwrap")]},
                         make_panel("asm"))
    assert len(spec.stages) == 3
    assert spec.stages[0].tools == ()
    flagged = [d for d in validate(spec, None) if d.code == "SC010"]
    assert len(flagged) == 2  # both empty stages


def test_unknown_stage_key_is_rejected():
    with pytest.raises(StageKeyMismatch, match="Finishing"):
        assemble_spec("task", STAGES, {"Finishing": [suggestion("bpy.ops.uv.unwrap")]},
                      make_panel("asm"))


def test_duplicate_stage_names_are_rejected():
    doubled = [StageOutline("Same", "first."), StageOutline("Same", "second.")]
    with pytest.raises(StageKeyMismatch):
        assemble_spec("task", doubled, {}, make_panel("asm"))


def test_assembled_spec_passes_structural_validation():
    spec = assemble_spec(
        "task",
        STAGES,
        {
            "Marking Seams": [suggestion("bpy.ops.mesh.mark_seam")],
            "Unwrapping": [suggestion("bpy.ops.uv.unwrap"),
                           suggestion("bpy.ops.uv.pack_islands", expertise=I, raw="INTERMEDIATE")],
            "Checking": [suggestion("bpy.ops.uv.select_overlap", expertise=A, raw="EXPERT")],
        },
        make_panel("asm"),
    )
    errors = [d for d in validate(spec, None) if d.severity is Severity.ERROR]
    assert errors == []
    assert spec.meta == {"source": "llm-pipeline"}


def test_blank_context_produces_no_requirements():
    spec = assemble_spec(
        "task", STAGES[:1],
        {"Marking Seams": [suggestion("bpy.ops.mesh.mark_seam", context="  ")]},
        make_panel("asm"),
    )
    assert spec.stages[0].tools[0].context_requirements == ()
