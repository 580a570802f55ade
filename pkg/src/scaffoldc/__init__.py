"""scaffoldc: compile declarative task-workflow specs into progressive-disclosure
Blender add-on panels, with an LLM-assisted authoring pipeline and offline
API-catalog validation."""

from .catalog import (
    ApiCatalog,
    CatalogEntry,
    DuplicateIdentifier,
    MalformedCatalog,
    catalog_to_json,
    load_catalog,
    resolve,
)
from .core import (
    ComplexityLevel,
    Concept,
    InvalidSpec,
    LEVELS,
    NativeHint,
    PanelConfig,
    ScaffoldSpec,
    Stage,
    Tool,
    ToolKind,
    UnknownLevel,
    default_visibility,
    normalize_level,
    spec_from_json,
    spec_to_json,
    visible_tools,
)
from .diagnostics import Diagnostic, Severity, validate
from .emitter import (
    AddonManifest,
    EmittedAddon,
    EmptySpec,
    UnvalidatedSpec,
    emit,
    emit_manifest,
)
from .llm import (
    EmptyResponse,
    FixtureMiss,
    FixtureTransport,
    HttpTransport,
    LlmTranscript,
    TransportError,
    complete,
    prompt_fingerprint,
    record_fixture,
)
from .parsing import (
    MalformedBlock,
    NoStagesFound,
    StageOutline,
    ToolSuggestion,
    parse_stages,
    parse_tool_suggestions,
)
from .pipeline import (
    PipelineError,
    PipelineResult,
    StageKeyMismatch,
    ValidationFailed,
    analyze_task,
    assemble_spec,
    render_code_generation,
    run_pipeline,
    select_tools,
)
from .prompts import (
    MissingPlaceholder,
    PromptTemplate,
    RenderedPrompt,
    TemplateId,
    UnknownPlaceholder,
    get_template,
    render,
)

__version__ = "0.1.0"
