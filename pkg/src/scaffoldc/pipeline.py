"""End-to-end authoring pipeline: analyze a task, map tools per stage, and
assemble the result into a spec ready for validation and emission.

Per-stage tool-selection calls fan out concurrently (the transport is the
only effectful boundary and must tolerate that); results merge back in stage
order, so the pipeline is deterministic for a deterministic transport.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .catalog import ApiCatalog
from .core import (
    PanelConfig,
    ScaffoldSpec,
    Stage,
    Tool,
    default_visibility,
)
from .diagnostics import Diagnostic, Severity, validate
from .emitter import EmittedAddon, emit
from .llm import LlmTranscript, LlmTransport, complete
from .parsing import (
    StageOutline,
    ToolSuggestion,
    parse_stages,
    parse_tool_suggestions,
)
from .prompts import RenderedPrompt, TemplateId, get_template, render


class StageKeyMismatch(ValueError):
    """A suggestion group is keyed to a stage name the analysis did not produce."""


class PipelineError(RuntimeError):
    """A pipeline step failed; carries the step name and the original error."""

    def __init__(self, step: str, cause: Exception):
        super().__init__(f"pipeline step {step!r} failed: {cause}")
        self.step = step
        self.cause = cause


class ValidationFailed(RuntimeError):
    """The assembled spec has Error-severity diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        errors = sum(1 for d in diagnostics if d.severity is Severity.ERROR)
        super().__init__(f"assembled spec failed validation with {errors} error(s)")
        self.diagnostics = diagnostics


def _ui_label(identifier: str) -> str:
    return identifier.rsplit(".", 1)[-1].replace("_", " ").title()


def assemble_spec(
    task: str,
    stages: list[StageOutline],
    suggestions_per_stage: dict[str, list[ToolSuggestion]],
    panel: PanelConfig,
    meta: dict[str, str] | None = None,
) -> ScaffoldSpec:
    """Build a structurally sound spec from parsed pipeline output.

    Tools get the cumulative default visibility for their suggested expertise,
    a ui-label derived from the identifier's last segment, and no native hint
    (authoring fills those in). Stage ordinals follow input order.
    """
    names = [stage.name for stage in stages]
    if len(set(names)) != len(names):
        raise StageKeyMismatch("stage names from analysis are not unique")
    unknown = set(suggestions_per_stage) - set(names)
    if unknown:
        raise StageKeyMismatch(
            f"suggestions keyed to unknown stage(s): {', '.join(sorted(unknown))}"
        )

    built_stages = []
    for ordinal, outline in enumerate(stages):
        tools = tuple(
            Tool(
                identifier=s.identifier,
                kind=s.kind,
                ui_label=_ui_label(s.identifier),
                rationale=s.rationale,
                context_requirements=(s.context,) if s.context.strip() else (),
                expertise=s.expertise,
                visibility=default_visibility(s.expertise),
                native_hint=None,
                tooltip=s.rationale,
                concept_tags=(),
            )
            for s in suggestions_per_stage.get(outline.name, [])
        )
        built_stages.append(
            Stage(
                name=outline.name,
                description=outline.description,
                ordinal=ordinal,
                concepts=(),
                tools=tools,
            )
        )

    return ScaffoldSpec(
        task_title=task,
        task_description=task,
        stages=tuple(built_stages),
        panel=panel,
        meta=dict(meta) if meta else {"source": "llm-pipeline"},
    )


def analyze_task(
    task: str, transport: LlmTransport
) -> tuple[list[StageOutline], LlmTranscript]:
    """Workflow analysis: one completion, parsed into an ordered stage list."""
    template = get_template(TemplateId.WORKFLOW_ANALYSIS)
    rendered = render(template, {"USER TASK DESCRIPTION": task})
    transcript = complete(rendered, transport)
    return parse_stages(transcript.response), transcript


def select_tools(
    stages: list[StageOutline], transport: LlmTransport
) -> tuple[dict[str, list[ToolSuggestion]], list[LlmTranscript]]:
    """Tool selection: one completion per stage, merged in stage order."""
    template = get_template(TemplateId.TOOL_SELECTION)

    def one_stage(outline: StageOutline) -> tuple[list[ToolSuggestion], LlmTranscript]:
        rendered = render(
            template,
            {"STAGE NAME": outline.name, "STAGE DESCRIPTION": outline.description},
        )
        transcript = complete(rendered, transport)
        return parse_tool_suggestions(transcript.response), transcript

    suggestions: dict[str, list[ToolSuggestion]] = {}
    transcripts: list[LlmTranscript] = []
    if not stages:
        return suggestions, transcripts
    with ThreadPoolExecutor(max_workers=len(stages)) as pool:
        for outline, (parsed, transcript) in zip(stages, pool.map(one_stage, stages)):
            suggestions[outline.name] = parsed
            transcripts.append(transcript)
    return suggestions, transcripts


@dataclass(frozen=True)
class PipelineResult:
    spec: ScaffoldSpec
    diagnostics: list[Diagnostic]
    addon: EmittedAddon
    transcripts: list[LlmTranscript]


def run_pipeline(
    task: str,
    panel: PanelConfig,
    catalog: ApiCatalog,
    transport: LlmTransport,
    *,
    strict: bool = True,
) -> PipelineResult:
    """analyze → per-stage tool selection → assemble → validate → emit.

    Fails fast at the first broken step: transport and parse problems raise
    :class:`PipelineError` naming the step; Error-severity diagnostics raise
    :class:`ValidationFailed` with the full list.
    """
    try:
        stages, analyze_transcript = analyze_task(task, transport)
    except Exception as exc:
        raise PipelineError("analyze", exc) from exc

    try:
        suggestions, tool_transcripts = select_tools(stages, transport)
    except Exception as exc:
        raise PipelineError("map-tools", exc) from exc

    try:
        spec = assemble_spec(task, stages, suggestions, panel)
    except Exception as exc:
        raise PipelineError("assemble", exc) from exc

    diagnostics = validate(spec, catalog, strict=strict)
    if any(d.severity is Severity.ERROR for d in diagnostics):
        raise ValidationFailed(diagnostics)

    try:
        addon = emit(spec)
    except Exception as exc:
        raise PipelineError("emit", exc) from exc

    return PipelineResult(
        spec=spec,
        diagnostics=diagnostics,
        addon=addon,
        transcripts=[analyze_transcript, *tool_transcripts],
    )


def render_code_generation(spec: ScaffoldSpec, code_example: str) -> RenderedPrompt:
    """Render the code-generation prompt for a spec.

    The shipped build path replaces this prompt with the deterministic
    emitter; rendering it stays useful for parity experiments, with the
    emitter's own output as the reference code example. The tool-mapping
    binding is the documented tuple shape: (API call string, UI label, list
    of visibility level names).
    """
    stages = spec.ordered_stages()
    mapping = {
        stage.name: [
            (
                tool.identifier,
                tool.ui_label,
                [level.canonical_name for level in sorted(tool.visibility)],
            )
            for tool in stage.tools
        ]
        for stage in stages
    }
    bindings = {
        "USER_PANEL_IDNAME": spec.panel.panel_idname,
        "USER_PANEL_LABEL": spec.panel.panel_label,
        "USER_CATEGORY_NAME": spec.panel.category,
        "USER_PROPGROUP_NAME": spec.panel.propgroup_name,
        "USER_PROP_POINTER_NAME": spec.panel.pointer_name,
        "LIST_OF_STAGE_NAMES": repr([stage.name for stage in stages]),
        "TOOL_MAPPING_DICTIONARY": repr(mapping),
        "CODE_EXAMPLE_PYTHON_SCRIPT": code_example,
    }
    return render(get_template(TemplateId.CODE_GENERATION), bindings)
