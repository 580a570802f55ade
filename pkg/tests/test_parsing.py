"""Response parsers: the worked example, leniency cases, and inversion properties."""

import pytest
from hypothesis import given, settings, strategies as st

from scaffoldc import (
    ComplexityLevel,
    MalformedBlock,
    NoStagesFound,
    StageOutline,
    ToolKind,
    UnknownLevel,
    parse_stages,
    parse_tool_suggestions,
)

# The worked example that ships inside the tool-selection template.
EXAMPLE_BLOCK = """\
– Identifier: bpy.ops.uv.unwrap
– Type: Operator
– Rationale: Performs the primary UV unwrapping calculation based on marked seams.
– Context: Requires Edit Mode, faces selected. Usually invoked via the 'U' key menu.
– Expertise: BEGINNER - Fundamental operation after marking seams.
"""


def test_worked_example_parses_to_basic_unwrap_operator():
    (suggestion,) = parse_tool_suggestions(EXAMPLE_BLOCK)
    assert suggestion.identifier == "bpy.ops.uv.unwrap"
    assert suggestion.kind is ToolKind.OPERATOR
    assert suggestion.expertise is ComplexityLevel.BASIC
    assert suggestion.expertise_raw == "BEGINNER"
    assert suggestion.rationale.startswith("Performs the primary")
    assert "Edit Mode" in suggestion.context


def test_two_stage_panel_names_parse():
    response = (
        "– **Marking Seams**: Define edges to cut.\n"
        "– **Unwrapping & Editing**: Flatten the mesh."
    )
    stages = parse_stages(response)
    assert len(stages) == 2
    assert stages[0] == StageOutline("Marking Seams", "Define edges to cut.")
    assert stages[1].name == "Unwrapping & Editing"


def test_empty_response_has_no_stages():
    with pytest.raises(NoStagesFound):
        parse_stages("")


def test_preamble_and_trailing_colon_lines_are_skipped():
    response = (
        "Here are the conceptual stages for this task:\n"
        "\n"
        "1. Blocking: Rough in the forms.\n"
    )
    stages = parse_stages(response)
    assert stages == [StageOutline("Blocking", "Rough in the forms.")]


def test_seven_stages_with_mixed_markers_parse_in_order():
    names = [f"Stage {chr(ord('A') + i)}" for i in range(7)]
    lines = []
    for i, name in enumerate(names):
        marker = f"{i + 1}." if i % 2 == 0 else "–"
        bold = f"**{name}**" if i % 3 == 0 else name
        lines.append(f"{marker} {bold}: Description {i}.")
    stages = parse_stages("\n".join(lines))
    assert [s.name for s in stages] == names
    assert [s.description for s in stages] == [f"Description {i}." for i in range(7)]


def test_missing_type_field_is_named():
    block = EXAMPLE_BLOCK.replace("– Type: Operator\n", "")
    with pytest.raises(MalformedBlock) as excinfo:
        parse_tool_suggestions(block)
    assert excinfo.value.field_name == "Type"


def test_bad_identifier_is_a_malformed_block():
    block = EXAMPLE_BLOCK.replace("bpy.ops.uv.unwrap", "Bpy.Ops.Nope")
    with pytest.raises(MalformedBlock) as excinfo:
        parse_tool_suggestions(block)
    assert excinfo.value.field_name == "Identifier"


def test_unknown_expertise_level_propagates():
    block = EXAMPLE_BLOCK.replace("BEGINNER", "WIZARD")
    with pytest.raises(UnknownLevel):
        parse_tool_suggestions(block)


def test_property_kind_and_alias_levels():
    block = (
        "- **Identifier**: context.scene.frame_end\n"
        "- **Type**: `Property`\n"
        "- **Rationale**: Sets the loop length.\n"
        "- **Context**: None.\n"
        "- **Expertise**: expert - Niche control.\n"
    )
    (suggestion,) = parse_tool_suggestions(block)
    assert suggestion.kind is ToolKind.PROPERTY
    assert suggestion.expertise is ComplexityLevel.ADVANCED
    assert suggestion.expertise_raw == "expert"


def test_wrapped_prose_continues_the_field():
    block = (
        "– Identifier: bpy.ops.uv.unwrap\n"
        "– Type: Operator\n"
        "– Rationale: A rationale that wraps\n"
        "  onto a second line.\n"
        "– Context: Edit Mode.\n"
        "– Expertise: BEGINNER - fine.\n"
    )
    (suggestion,) = parse_tool_suggestions(block)
    assert suggestion.rationale == "A rationale that wraps onto a second line."


def test_twelve_synthetic_blocks_round_trip():
    blocks = []
    expected = []
    for i in range(12):
        level = ["BEGINNER", "INTERMEDIATE", "EXPERT"][i % 3]
        kind = "Operator" if i % 2 == 0 else "Property"
        identifier = f"bpy.ops.mod{i}.action_{i}" if kind == "Operator" else f"context.scene.prop_{i}"
        blocks.append(
            f"– Identifier: {identifier}\n"
            f"– Type: {kind}\n"
            f"– Rationale: Reason number {i}.\n"
            f"– Context: Context number {i}.\n"
            f"– Expertise: {level} - justification {i}.\n"
        )
        expected.append((identifier, kind, f"Reason number {i}.", f"Context number {i}.", level))
    parsed = parse_tool_suggestions("\n".join(blocks))
    assert len(parsed) == 12
    for suggestion, (identifier, kind, rationale, context, level) in zip(parsed, expected):
        assert suggestion.identifier == identifier
        assert suggestion.kind.value == kind
        assert suggestion.rationale == rationale
        assert suggestion.context == context
        assert suggestion.expertise_raw == level


# --- generate-then-parse inversion properties -----------------------------------

# Stage names and descriptions that survive a round trip: no colon (the field
# separator), no newline, no leading list marker or markdown the parser strips.
_name_text = st.text(
    alphabet=st.characters(
        whitelist_categories=("Lu", "Ll", "Nd"), whitelist_characters=" &'"
    ),
    min_size=1,
    max_size=40,
).map(lambda s: s.strip()).filter(
    lambda s: s and not s[0].isdigit() and "*" not in s
)

_sentence_text = _name_text.map(lambda s: s + ".")


@st.composite
def stage_lists(draw):
    count = draw(st.integers(min_value=1, max_value=8))
    names = draw(
        st.lists(_name_text, min_size=count, max_size=count, unique=True)
    )
    descriptions = draw(st.lists(_sentence_text, min_size=count, max_size=count))
    return list(zip(names, descriptions))


@settings(max_examples=200, deadline=None)
@given(stage_lists(), st.data())
def test_stage_generation_inverts(stages, data):
    lines = []
    for index, (name, description) in enumerate(stages):
        style = data.draw(st.sampled_from(["numbered", "dash", "bold", "plain"]))
        if style == "numbered":
            lines.append(f"{index + 1}. {name}: {description}")
        elif style == "dash":
            lines.append(f"– {name}: {description}")
        elif style == "bold":
            lines.append(f"- **{name}**: {description}")
        else:
            lines.append(f"{name}: {description}")
    parsed = parse_stages("\n".join(lines))
    assert [(s.name, s.description) for s in parsed] == stages


_identifier = st.builds(
    lambda parts: ".".join(parts),
    st.lists(
        st.text(alphabet="abcdefghijklmnopqrstuvwxyz_", min_size=1, max_size=8).filter(
            lambda s: not s[0].isdigit()
        ),
        min_size=2,
        max_size=4,
    ),
)

_prose = st.text(
    alphabet=st.characters(whitelist_categories=("Lu", "Ll", "Nd"), whitelist_characters=" ,."),
    min_size=1,
    max_size=60,
).map(lambda s: s.strip()).filter(lambda s: s and s.splitlines()[0] == s)


@st.composite
def suggestion_blocks(draw):
    count = draw(st.integers(min_value=1, max_value=6))
    out = []
    for _ in range(count):
        out.append(
            dict(
                identifier=draw(_identifier),
                kind=draw(st.sampled_from(["Operator", "Property"])),
                rationale=draw(_prose),
                context=draw(_prose),
                level=draw(st.sampled_from(["BEGINNER", "INTERMEDIATE", "EXPERT",
                                            "BASIC", "ADVANCED"])),
            )
        )
    return out


@settings(max_examples=200, deadline=None)
@given(suggestion_blocks(), st.sampled_from(["– ", "- ", "* ", ""]))
def test_suggestion_generation_inverts(blocks, marker):
    text = "\n".join(
        f"{marker}Identifier: {b['identifier']}\n"
        f"{marker}Type: {b['kind']}\n"
        f"{marker}Rationale: {b['rationale']}\n"
        f"{marker}Context: {b['context']}\n"
        f"{marker}Expertise: {b['level']} - generated justification.\n"
        for b in blocks
    )
    parsed = parse_tool_suggestions(text)
    assert len(parsed) == len(blocks)
    for suggestion, b in zip(parsed, blocks):
        assert suggestion.identifier == b["identifier"]
        assert suggestion.kind.value == b["kind"]
        assert suggestion.rationale == b["rationale"]
        assert suggestion.context == b["context"]
        assert suggestion.expertise_raw == b["level"]
