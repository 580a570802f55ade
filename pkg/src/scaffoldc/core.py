"""Domain model for scaffolded task panels.

A :class:`ScaffoldSpec` describes one task's scaffolded interface: an ordered
list of workflow stages, each carrying domain concepts and the tools surfaced
for that stage, plus the panel configuration used by the emitter. Every type
here is an immutable value; every operation is a pure function, so values are
safe to share across threads.

Complexity levels drive progressive disclosure: a tool's ``visibility`` set
names the levels at which it is drawn, and the default policy is cumulative
(a tool becomes visible at its expertise level and stays visible above it).
"""

import enum
import json
import re
from dataclasses import dataclass, field


class UnknownLevel(ValueError):
    """Raised for a string that names no complexity level or alias."""


class InvalidSpec(ValueError):
    """Raised when a spec value or document violates a structural constraint."""


class ComplexityLevel(enum.IntEnum):
    """User-selectable disclosure tier. Ordered BASIC < INTERMEDIATE < ADVANCED."""

    BASIC = 0
    INTERMEDIATE = 1
    ADVANCED = 2

    @property
    def canonical_name(self) -> str:
        return self.name


LEVELS: tuple[ComplexityLevel, ...] = (
    ComplexityLevel.BASIC,
    ComplexityLevel.INTERMEDIATE,
    ComplexityLevel.ADVANCED,
)

# Alias spellings used by the tool-selection and code-generation prompt
# contracts; the canonical set matches the shipped interface wording.
_LEVEL_ALIASES = {
    "BEGINNER": ComplexityLevel.BASIC,
    "EXPERT": ComplexityLevel.ADVANCED,
}


def normalize_level(raw: str) -> ComplexityLevel:
    """Map any casing of a level name or alias to its canonical level.

    BEGINNER normalizes to BASIC and EXPERT to ADVANCED; canonical names map
    to themselves. Raises :class:`UnknownLevel` for anything else.
    """
    token = raw.strip().upper()
    if token in ComplexityLevel.__members__:
        return ComplexityLevel[token]
    if token in _LEVEL_ALIASES:
        return _LEVEL_ALIASES[token]
    raise UnknownLevel(f"unknown complexity level: {raw!r}")


def default_visibility(expertise: ComplexityLevel) -> frozenset[ComplexityLevel]:
    """Cumulative disclosure: visible at the expertise level and every level above."""
    return frozenset(level for level in LEVELS if level >= expertise)


class ToolKind(enum.Enum):
    OPERATOR = "Operator"
    PROPERTY = "Property"


#: Dotted API-call grammar shared by tools and catalog entries:
#: two or more lowercase segments joined by dots.
IDENTIFIER_RE = re.compile(r"^[a-z_][a-z0-9_]*(?:\.[a-z_][a-z0-9_]*)+$")

_PY_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def is_tool_identifier(text: str) -> bool:
    return bool(IDENTIFIER_RE.match(text))


@dataclass(frozen=True)
class NativeHint:
    """Where a tool lives in the native interface: a shortcut, a menu path, or both."""

    shortcut: str | None = None
    menu_path: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "menu_path", tuple(self.menu_path))
        if not self.shortcut and not self.menu_path:
            raise InvalidSpec("native hint needs a shortcut or a menu path")


@dataclass(frozen=True)
class Concept:
    """A domain terminology item attached to a stage, linked to the tools that embody it."""

    name: str
    definition: str
    related_tool_ids: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "related_tool_ids", tuple(self.related_tool_ids))
        if not self.name.strip():
            raise InvalidSpec("concept name must be nonempty")


@dataclass(frozen=True)
class Tool:
    """One surfaced function: a native operator button or a property widget."""

    identifier: str
    kind: ToolKind
    ui_label: str
    rationale: str = ""
    context_requirements: tuple[str, ...] = ()
    expertise: ComplexityLevel = ComplexityLevel.BASIC
    visibility: frozenset[ComplexityLevel] = field(default_factory=frozenset)
    native_hint: NativeHint | None = None
    tooltip: str = ""
    concept_tags: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "context_requirements", tuple(self.context_requirements))
        object.__setattr__(self, "visibility", frozenset(self.visibility))
        object.__setattr__(self, "concept_tags", tuple(self.concept_tags))
        if not is_tool_identifier(self.identifier):
            raise InvalidSpec(
                f"tool identifier {self.identifier!r} does not match the dotted-path grammar"
            )
        # Empty visibility stays representable: validate() reports it as SC003.


@dataclass(frozen=True)
class Stage:
    """One conceptual phase of the task; tools keep authoring order, which is emission order."""

    name: str
    description: str
    ordinal: int
    concepts: tuple[Concept, ...] = ()
    tools: tuple[Tool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "concepts", tuple(self.concepts))
        object.__setattr__(self, "tools", tuple(self.tools))
        if not self.name.strip():
            raise InvalidSpec("stage name must be nonempty")
        if self.ordinal < 0:
            raise InvalidSpec(f"stage ordinal must be >= 0, got {self.ordinal}")


@dataclass(frozen=True)
class PanelConfig:
    """Identifiers and labels for the emitted panel and its settings group."""

    panel_idname: str
    panel_label: str
    category: str
    propgroup_name: str
    pointer_name: str
    space_type: str = "VIEW_3D"
    region_type: str = "UI"

    def __post_init__(self):
        for name, value in (
            ("panel-idname", self.panel_idname),
            ("panel-label", self.panel_label),
            ("category", self.category),
            ("propgroup-name", self.propgroup_name),
            ("pointer-name", self.pointer_name),
            ("space-type", self.space_type),
            ("region-type", self.region_type),
        ):
            if not value.strip():
                raise InvalidSpec(f"panel {name} must be nonempty")
        # These three are interpolated into the generated script as identifiers,
        # so they must be valid ones.
        for name, value in (
            ("panel-idname", self.panel_idname),
            ("propgroup-name", self.propgroup_name),
            ("pointer-name", self.pointer_name),
        ):
            if not _PY_IDENT_RE.match(value):
                raise InvalidSpec(f"panel {name} {value!r} is not a valid identifier")


@dataclass(frozen=True)
class ScaffoldSpec:
    """Complete declarative description of one task's scaffolded interface."""

    task_title: str
    task_description: str
    stages: tuple[Stage, ...]
    panel: PanelConfig
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "meta", dict(self.meta))
        seen: dict[str, str] = {}
        for stage in self.stages:
            for concept in stage.concepts:
                if concept.name in seen:
                    raise InvalidSpec(
                        f"concept {concept.name!r} appears in both "
                        f"{seen[concept.name]!r} and {stage.name!r}; "
                        "concepts may not repeat across stages"
                    )
                seen[concept.name] = stage.name

    def ordered_stages(self) -> tuple[Stage, ...]:
        """Stages sorted by ordinal; this is box order in the emitted panel."""
        return tuple(sorted(self.stages, key=lambda s: s.ordinal))

    def all_tools(self) -> tuple[Tool, ...]:
        return tuple(t for stage in self.ordered_stages() for t in stage.tools)

    def tool_ids(self) -> frozenset[str]:
        return frozenset(t.identifier for t in self.all_tools())


def visible_tools(
    spec: ScaffoldSpec, level: ComplexityLevel
) -> list[tuple[str, Tool]]:
    """Tools drawn at ``level``: a pure filter on each tool's visibility set.

    Results are ordered by stage ordinal, then by authoring order within the
    stage.
    """
    out: list[tuple[str, Tool]] = []
    for stage in spec.ordered_stages():
        for tool in stage.tools:
            if level in tool.visibility:
                out.append((stage.name, tool))
    return out


# --- JSON serialization -----------------------------------------------------
#
# The on-disk form is a single JSON document whose keys are the field names
# above in kebab-case; levels appear by canonical name, visibility sets as
# level-ordered arrays. See docs/file_formats.md.


def canonical_json(value) -> str:
    """Serialize with a fixed layout so equal values give equal bytes."""
    return json.dumps(value, indent=2, ensure_ascii=False) + "\n"


def _hint_to_dict(hint: NativeHint) -> dict:
    out: dict = {}
    if hint.shortcut:
        out["shortcut"] = hint.shortcut
    if hint.menu_path:
        out["menu-path"] = list(hint.menu_path)
    return out


def _tool_to_dict(tool: Tool) -> dict:
    return {
        "identifier": tool.identifier,
        "kind": tool.kind.value,
        "ui-label": tool.ui_label,
        "rationale": tool.rationale,
        "context-requirements": list(tool.context_requirements),
        "expertise": tool.expertise.canonical_name,
        "visibility": [lvl.canonical_name for lvl in sorted(tool.visibility)],
        "native-hint": _hint_to_dict(tool.native_hint) if tool.native_hint else None,
        "tooltip": tool.tooltip,
        "concept-tags": list(tool.concept_tags),
    }


def spec_to_dict(spec: ScaffoldSpec) -> dict:
    return {
        "task-title": spec.task_title,
        "task-description": spec.task_description,
        "stages": [
            {
                "name": stage.name,
                "description": stage.description,
                "ordinal": stage.ordinal,
                "concepts": [
                    {
                        "name": c.name,
                        "definition": c.definition,
                        "related-tool-ids": list(c.related_tool_ids),
                    }
                    for c in stage.concepts
                ],
                "tools": [_tool_to_dict(t) for t in stage.tools],
            }
            for stage in spec.stages
        ],
        "panel": {
            "panel-idname": spec.panel.panel_idname,
            "panel-label": spec.panel.panel_label,
            "category": spec.panel.category,
            "space-type": spec.panel.space_type,
            "region-type": spec.panel.region_type,
            "propgroup-name": spec.panel.propgroup_name,
            "pointer-name": spec.panel.pointer_name,
        },
        "meta": {key: spec.meta[key] for key in sorted(spec.meta)},
    }


def spec_to_json(spec: ScaffoldSpec) -> str:
    return canonical_json(spec_to_dict(spec))


class _Reader:
    """Shape-checking helper that reports the path of whatever is wrong."""

    def __init__(self, data, path: str):
        if not isinstance(data, dict):
            raise InvalidSpec(f"{path}: expected an object")
        self.data = dict(data)
        self.path = path

    def take(self, key: str, kind, *, optional: bool = False, default=None):
        if key not in self.data:
            if optional:
                return default
            raise InvalidSpec(f"{self.path}: missing key {key!r}")
        value = self.data.pop(key)
        if kind is not None and not isinstance(value, kind):
            raise InvalidSpec(f"{self.path}.{key}: wrong type {type(value).__name__}")
        return value

    def finish(self):
        if self.data:
            stray = ", ".join(sorted(self.data))
            raise InvalidSpec(f"{self.path}: unknown keys: {stray}")


def _str_list(value, path: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InvalidSpec(f"{path}: expected a list of strings")
    return tuple(value)


def _level_from_name(raw, path: str) -> ComplexityLevel:
    if not isinstance(raw, str) or raw not in ComplexityLevel.__members__:
        raise InvalidSpec(f"{path}: {raw!r} is not a canonical level name")
    return ComplexityLevel[raw]


def _kind_from_name(raw, path: str) -> ToolKind:
    for kind in ToolKind:
        if kind.value == raw:
            return kind
    raise InvalidSpec(f"{path}: {raw!r} is not a tool kind")


def _tool_from_dict(data, path: str) -> Tool:
    r = _Reader(data, path)
    identifier = r.take("identifier", str)
    kind = _kind_from_name(r.take("kind", str), f"{path}.kind")
    ui_label = r.take("ui-label", str)
    rationale = r.take("rationale", str, optional=True, default="")
    context_req = _str_list(
        r.take("context-requirements", list, optional=True, default=[]),
        f"{path}.context-requirements",
    )
    expertise = _level_from_name(r.take("expertise", str), f"{path}.expertise")
    visibility = frozenset(
        _level_from_name(v, f"{path}.visibility")
        for v in r.take("visibility", list)
    )
    hint_data = r.take("native-hint", None, optional=True)
    hint = None
    if hint_data is not None:
        hr = _Reader(hint_data, f"{path}.native-hint")
        shortcut = hr.take("shortcut", str, optional=True)
        menu_path = _str_list(
            hr.take("menu-path", list, optional=True, default=[]),
            f"{path}.native-hint.menu-path",
        )
        hr.finish()
        try:
            hint = NativeHint(shortcut=shortcut, menu_path=menu_path)
        except InvalidSpec as exc:
            raise InvalidSpec(f"{path}.native-hint: {exc}") from None
    tooltip = r.take("tooltip", str, optional=True, default="")
    tags = _str_list(
        r.take("concept-tags", list, optional=True, default=[]), f"{path}.concept-tags"
    )
    r.finish()
    try:
        return Tool(
            identifier=identifier,
            kind=kind,
            ui_label=ui_label,
            rationale=rationale,
            context_requirements=context_req,
            expertise=expertise,
            visibility=visibility,
            native_hint=hint,
            tooltip=tooltip,
            concept_tags=tags,
        )
    except InvalidSpec as exc:
        raise InvalidSpec(f"{path}: {exc}") from None


def panel_from_dict(data, path: str = "panel") -> PanelConfig:
    pr = _Reader(data, path)
    try:
        panel = PanelConfig(
            panel_idname=pr.take("panel-idname", str),
            panel_label=pr.take("panel-label", str),
            category=pr.take("category", str),
            space_type=pr.take("space-type", str, optional=True, default="VIEW_3D"),
            region_type=pr.take("region-type", str, optional=True, default="UI"),
            propgroup_name=pr.take("propgroup-name", str),
            pointer_name=pr.take("pointer-name", str),
        )
    except InvalidSpec as exc:
        raise InvalidSpec(f"{path}: {exc}") from None
    pr.finish()
    return panel


def spec_from_dict(data) -> ScaffoldSpec:
    r = _Reader(data, "spec")
    title = r.take("task-title", str)
    description = r.take("task-description", str)
    stages_data = r.take("stages", list)
    panel_data = r.take("panel", dict)
    meta = r.take("meta", dict, optional=True, default={})
    r.finish()
    if not all(isinstance(k, str) and isinstance(v, str) for k, v in meta.items()):
        raise InvalidSpec("spec.meta: expected string keys and values")

    stages = []
    for i, stage_data in enumerate(stages_data):
        path = f"stages[{i}]"
        sr = _Reader(stage_data, path)
        name = sr.take("name", str)
        desc = sr.take("description", str)
        ordinal = sr.take("ordinal", int)
        if isinstance(ordinal, bool):
            raise InvalidSpec(f"{path}.ordinal: wrong type bool")
        concepts = []
        for k, concept_data in enumerate(sr.take("concepts", list, optional=True, default=[])):
            cpath = f"{path}.concepts[{k}]"
            cr = _Reader(concept_data, cpath)
            cname = cr.take("name", str)
            cdef = cr.take("definition", str)
            related = _str_list(
                cr.take("related-tool-ids", list, optional=True, default=[]),
                f"{cpath}.related-tool-ids",
            )
            cr.finish()
            try:
                concepts.append(Concept(name=cname, definition=cdef, related_tool_ids=related))
            except InvalidSpec as exc:
                raise InvalidSpec(f"{cpath}: {exc}") from None
        tools = [
            _tool_from_dict(tool_data, f"{path}.tools[{j}]")
            for j, tool_data in enumerate(sr.take("tools", list, optional=True, default=[]))
        ]
        sr.finish()
        try:
            stages.append(
                Stage(name=name, description=desc, ordinal=ordinal,
                      concepts=tuple(concepts), tools=tuple(tools))
            )
        except InvalidSpec as exc:
            raise InvalidSpec(f"{path}: {exc}") from None

    panel = panel_from_dict(panel_data)

    return ScaffoldSpec(
        task_title=title,
        task_description=description,
        stages=tuple(stages),
        panel=panel,
        meta=dict(meta),
    )


def spec_from_json(text: str) -> ScaffoldSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"spec document is not valid JSON: {exc}") from None
    return spec_from_dict(data)
