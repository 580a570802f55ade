"""Parsers for the structured text the two analysis prompts ask the model for.

Both parsers are lenient about markdown decoration (bullet glyphs, bold
markers, backticks) because model formatting drifts, and strict about field
presence. They are pure functions of their input string.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple

from .core import ComplexityLevel, ToolKind, is_tool_identifier, normalize_level


class NoStagesFound(ValueError):
    """The workflow-analysis response contained no parseable stage lines."""


class MalformedBlock(ValueError):
    """A tool-suggestion block is missing or mangling a required field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(message)
        self.field_name = field_name


class StageOutline(NamedTuple):
    name: str
    description: str


@dataclass(frozen=True)
class ToolSuggestion:
    """One suggested functionality from the tool-selection response."""

    identifier: str
    kind: ToolKind
    rationale: str
    context: str
    expertise_raw: str
    expertise: ComplexityLevel


# Optional leading list marker: a number like "1." / "2)" or a bullet glyph.
# A lone "*" is a bullet; "**" opens bold text and must stay with the name.
_MARKER = r"(?:\d+[.)]|[-–—•]|\*(?!\*))"
_STAGE_LINE_RE = re.compile(rf"^\s*{_MARKER}?\s*(.+?)\s*:\s*(.+?)\s*$")

_BOLD_RE = re.compile(r"^\*\*(.*)\*\*$")


def _unbold(text: str) -> str:
    match = _BOLD_RE.match(text.strip())
    return match.group(1).strip() if match else text.strip()


def _untick(text: str) -> str:
    return text.strip().strip("`").strip("'\"").strip()


def parse_stages(response: str) -> list[StageOutline]:
    """Extract ``name: description`` lines in order, however they are bulleted.

    Raises :class:`NoStagesFound` when nothing in the response matches.
    """
    stages: list[StageOutline] = []
    for line in response.splitlines():
        match = _STAGE_LINE_RE.match(line)
        if not match:
            continue
        name = _unbold(match.group(1))
        description = match.group(2).strip()
        if name and description:
            stages.append(StageOutline(name=name, description=description))
    if not stages:
        raise NoStagesFound("no stage lines of the form 'Name: description' found")
    return stages


_FIELD_NAMES = ("Identifier", "Type", "Rationale", "Context", "Expertise")
_FIELD_LINE_RE = re.compile(
    rf"^\s*{_MARKER}?\s*(?:\*\*)?({'|'.join(_FIELD_NAMES)})(?:\*\*)?\s*:\s*(.*?)\s*$",
    re.IGNORECASE,
)


def _finish_block(fields: dict[str, str], index: int) -> ToolSuggestion:
    for name in _FIELD_NAMES:
        if name not in fields:
            raise MalformedBlock(name, f"block {index}: missing field {name!r}")

    identifier = _untick(fields["Identifier"])
    if not is_tool_identifier(identifier):
        raise MalformedBlock(
            "Identifier", f"block {index}: bad identifier {identifier!r}"
        )

    kind_token = _untick(fields["Type"]).lower()
    kind = next((k for k in ToolKind if k.value.lower() == kind_token), None)
    if kind is None:
        raise MalformedBlock("Type", f"block {index}: unknown type {fields['Type']!r}")

    # The expertise value is "LEVEL - justification"; the level token is what
    # gets normalized, the justification is prose and is not retained.
    expertise_text = fields["Expertise"]
    level_token = _untick(expertise_text.split("-", 1)[0])
    level = normalize_level(level_token)  # UnknownLevel propagates

    return ToolSuggestion(
        identifier=identifier,
        kind=kind,
        rationale=fields["Rationale"],
        context=fields["Context"],
        expertise_raw=level_token,
        expertise=level,
    )


def parse_tool_suggestions(response: str) -> list[ToolSuggestion]:
    """Parse repeated Identifier/Type/Rationale/Context/Expertise blocks.

    A block starts at each ``Identifier:`` line. Lines that are not field
    lines continue the current field (wrapped prose); text before the first
    block is ignored.
    """
    suggestions: list[ToolSuggestion] = []
    fields: dict[str, str] = {}
    current: str | None = None

    def close_block():
        nonlocal fields, current
        if fields:
            suggestions.append(_finish_block(fields, len(suggestions)))
        fields = {}
        current = None

    for line in response.splitlines():
        match = _FIELD_LINE_RE.match(line)
        if match:
            name = match.group(1).capitalize()
            if name == "Identifier" and fields:
                close_block()
            if name in fields:
                raise MalformedBlock(
                    name, f"block {len(suggestions)}: field {name!r} repeated"
                )
            fields[name] = match.group(2)
            current = name
        elif line.strip() and current is not None:
            fields[current] = f"{fields[current]} {line.strip()}".strip()
    close_block()

    return suggestions
