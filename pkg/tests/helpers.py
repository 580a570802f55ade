"""Shared test helpers: repo paths and small spec builders."""

import random
from pathlib import Path

from scaffoldc import (
    ComplexityLevel,
    PanelConfig,
    ScaffoldSpec,
    Stage,
    Tool,
    ToolKind,
    default_visibility,
)

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"

SPEC_NAMES = [
    "task1_uv_unwrapping",
    "task2_walk_cycle",
    "uv_organic",
    "uv_hard_surface",
    "walk_emotive",
    "walk_stylized",
    "minimal_empty_stage",
]


def make_panel(suffix: str = "test") -> PanelConfig:
    return PanelConfig(
        panel_idname=f"VIEW3D_PT_{suffix}_scaffold",
        panel_label=f"Scaffold: {suffix}",
        category="Scaffold",
        propgroup_name=f"{suffix.title()}ScaffoldSettings",
        pointer_name=f"{suffix}_scaffold",
    )


def make_tool(
    identifier: str,
    expertise: ComplexityLevel = ComplexityLevel.BASIC,
    *,
    kind: ToolKind = ToolKind.OPERATOR,
    visibility=None,
    label: str | None = None,
    **kwargs,
) -> Tool:
    return Tool(
        identifier=identifier,
        kind=kind,
        ui_label=label or identifier.rsplit(".", 1)[-1].replace("_", " ").title(),
        expertise=expertise,
        visibility=default_visibility(expertise) if visibility is None else visibility,
        **kwargs,
    )


def make_spec(stages, *, panel_suffix: str = "test", title: str = "test task") -> ScaffoldSpec:
    return ScaffoldSpec(
        task_title=title,
        task_description=title,
        stages=tuple(stages),
        panel=make_panel(panel_suffix),
        meta={"source": "test"},
    )


_SEGMENTS = ["mesh", "uv", "pose", "graph", "anim", "object", "scene", "paint",
             "mark", "select", "unwrap", "pack", "relax", "bake", "clean", "push",
             "flip", "key", "loop", "align"]


def random_default_policy_spec(rng: random.Random, max_tools: int = 20) -> ScaffoldSpec:
    """A structurally valid spec whose tools all use cumulative visibility."""
    n_stages = rng.randint(1, 4)
    total_tools = rng.randint(0, max_tools)
    used = set()
    stage_tools: list[list[Tool]] = [[] for _ in range(n_stages)]
    while len(used) < total_tools:
        a, b, c = rng.choice(_SEGMENTS), rng.choice(_SEGMENTS), rng.choice(_SEGMENTS)
        identifier = f"bpy.ops.{a}.{b}_{c}_{len(used)}"
        if identifier in used:
            continue
        used.add(identifier)
        expertise = rng.choice(list(ComplexityLevel))
        stage_tools[rng.randrange(n_stages)].append(make_tool(identifier, expertise))
    stages = [
        Stage(
            name=f"Stage {i}",
            description=f"Phase {i} of the task.",
            ordinal=i,
            tools=tuple(tools),
        )
        for i, tools in enumerate(stage_tools)
    ]
    return make_spec(stages, panel_suffix="random")
