"""The three authoring prompt templates and their placeholder renderer.

Placeholders use the bracket style ``[NAME IN CAPS]``. Rendering is a single
byte-deterministic substitution pass: bound values are spliced in verbatim and
never rescanned, so a value may safely contain bracketed text.
"""

import enum
import re
from dataclasses import dataclass


class MissingPlaceholder(ValueError):
    """A required placeholder has no binding (or an empty one)."""


class UnknownPlaceholder(ValueError):
    """A binding names a placeholder the template does not declare."""


class TemplateId(enum.Enum):
    WORKFLOW_ANALYSIS = "WorkflowAnalysis"
    TOOL_SELECTION = "ToolSelection"
    CODE_GENERATION = "CodeGeneration"


PLACEHOLDER_RE = re.compile(r"\[([A-Z](?:[A-Z0-9_ ]*[A-Z0-9])?)\]")


@dataclass(frozen=True)
class PromptTemplate:
    id: TemplateId
    body: str
    required_placeholders: tuple[str, ...]

    def __post_init__(self):
        found = set(PLACEHOLDER_RE.findall(self.body))
        declared = set(self.required_placeholders)
        if found != declared:
            raise ValueError(
                f"template {self.id.value}: declared placeholders {sorted(declared)} "
                f"!= placeholders in body {sorted(found)}"
            )


@dataclass(frozen=True)
class RenderedPrompt:
    template_id: TemplateId
    text: str
    bindings: dict[str, str]


_WORKFLOW_ANALYSIS_BODY = """\
You are an expert Blender user and workflow analyst specializing in task decomposition for UI design. Your objective is to analyze the specified Blender user task and break it down into its primary conceptual stages.

TASK TO ANALYZE:
[USER TASK DESCRIPTION]

METHOD:
Decompose the task into logical stages that represent a typical, efficient workflow a user would follow within Blender. Focus on the major distinct phases, moving from initial setup/preparation towards finalization/review. Aim for a reasonable number of stages that capture the core workflow without excessive granularity.

OUTPUT REQUIREMENTS:
Provide the output as a numbered list. Each list item must represent a distinct conceptual stage and include:
A concise Stage Name.
A brief, one-sentence Description clarifying the purpose of the stage.
The output must be structured clearly to serve as the foundational organization for sections within a custom Blender UI panel designed to guide users through this specific workflow.

EXAMPLE OUTPUT FORMAT:
– Stage Name 1: Brief Description.
– Stage Name 2: Brief Description.
– …
– Stage Name n: Brief Description.
"""

_TOOL_SELECTION_BODY = """\
You are an expert Blender Python API developer (Blender version 3.6). Your task is to identify relevant Blender functionalities for a specific stage of a larger workflow, intended for inclusion in a custom UI panel.

GIVEN WORKFLOW STAGE:
– Stage Name: [STAGE NAME]
– Stage Description: [STAGE DESCRIPTION]

TASK:
Identify the core Blender Python operators (bpy.ops.*) and key properties (bpy.types.Scene, context.object.data.*, context.tool_settings.*, bpy.props.* if defined in a PropertyGroup) most commonly used and essential for achieving the goals described in the provided workflow stage. Prioritize stable and frequently used API elements.

OUTPUT REQUIREMENTS:
For each stage, output a bulleted list of suggested functionalities. Each item in the list must include:
– Identifier: The full Python identifier.
– Type: Specify if it's an 'Operator' or 'Property'.
– Rationale: Briefly explain why this function is relevant to the given stage's description/goal.
– Context: Note any critical context requirements for the function to be active or relevant.
– Expertise: The suggested level (BEGINNER, INTERMEDIATE, or EXPERT) with a brief justification (e.g., BEGINNER - Core operation for the task, INTERMEDIATE - Requires understanding of parameters, EXPERT - Used for complex optimization or non-standard workflows).

EXAMPLE OUTPUT FORMAT:
– Identifier: bpy.ops.uv.unwrap
– Type: Operator
– Rationale: Performs the primary UV unwrapping calculation based on marked seams.
– Context: Requires Edit Mode, faces selected. Usually invoked via the 'U' key menu.
– Expertise: BEGINNER - Fundamental operation after marking seams.
"""

_CODE_GENERATION_BODY = """\
You are an expert Blender Python UI developer using the bpy API (Blender version 3.6). Generate Python code for a Blender UI Panel (bpy.types.Panel) based precisely on the following specifications.

SPECIFICATIONS:

1. Panel Configuration:
– bl_idname: [USER_PANEL_IDNAME]
– bl_label: [USER_PANEL_LABEL]
– bl_space_type: VIEW_3D
– bl_region_type: UI
– bl_category: [USER_CATEGORY_NAME]
– poll(cls, context): Include a basic poll(cls, context) method checking for relevant context.

2. Settings Storage (PropertyGroup):
– Define a PropertyGroup named [USER_PROPGROUP_NAME].
– Attach this PropertyGroup to the scene via a PointerProperty named [USER_PROP_POINTER_NAME].
– The PropertyGroup contains an EnumProperty named expertise_level with items ('BASIC', 'INTERMEDIATE', 'EXPERT').

3. Panel draw() Method Implementation:
– Retrieve the PropertyGroup instance via context.scene.[USER_PROP_POINTER_NAME].
– Display a UI element (e.g., layout.prop) allowing the user to select the expertise_level.
– Use the following list of conceptual stages to structure the panel: [LIST_OF_STAGE_NAMES].
– For each stage name in the list, create a distinct visual section using layout.box() labeled with the stage name.
– Within each stage's box, display the tools specified in the [TOOL_MAPPING_DICTIONARY] provided below.
– The [TOOL_MAPPING_DICTIONARY] maps stage names to a list of tool tuples. Each tuple contains: ('API_CALL_STRING', 'UI_LABEL', ['LEVEL1', 'LEVEL2', …]). API_CALL_STRING is the operator ID or property path. UI_LABEL is the text for the button/property. The list contains the expertise levels for which the tool should be VISIBLE.
– Implement the visibility logic: only draw a tool if the current expertise_level matches one of the levels in the tool's visibility list.
– Use layout.operator() for operators specified in API_CALL_STRING.
– Use layout.prop(props_instance, property_name) for properties specified in API_CALL_STRING.
– Add a layout.separator() between visible tools within each stage's box for visual spacing.

4. Code Requirements:
– Include necessary imports (bpy, bpy.props, bpy.types).
– Adhere to standard Blender Python scripting conventions and formatting.
– Include complete, basic registration and unregistration functions for the Panel class.

5. Reference Code Structure:
– You may refer to the provided [CODE_EXAMPLE_PYTHON_SCRIPT] primarily to understand the expected structure of the draw method, conditional visibility checks based on expertise level, and the usage of layout elements (box, prop, operator, separator). Adapt the structure as needed to fit the specific tools and stages provided.

INPUTS TO BE USED:
– Conceptual Stages List: [LIST_OF_STAGE_NAMES]
– Tool Mapping Dictionary: [TOOL_MAPPING_DICTIONARY]
– Code Example: [CODE_EXAMPLE_PYTHON_SCRIPT]
"""

TEMPLATES: dict[TemplateId, PromptTemplate] = {
    TemplateId.WORKFLOW_ANALYSIS: PromptTemplate(
        id=TemplateId.WORKFLOW_ANALYSIS,
        body=_WORKFLOW_ANALYSIS_BODY,
        required_placeholders=("USER TASK DESCRIPTION",),
    ),
    TemplateId.TOOL_SELECTION: PromptTemplate(
        id=TemplateId.TOOL_SELECTION,
        body=_TOOL_SELECTION_BODY,
        required_placeholders=("STAGE NAME", "STAGE DESCRIPTION"),
    ),
    TemplateId.CODE_GENERATION: PromptTemplate(
        id=TemplateId.CODE_GENERATION,
        body=_CODE_GENERATION_BODY,
        required_placeholders=(
            "USER_PANEL_IDNAME",
            "USER_PANEL_LABEL",
            "USER_CATEGORY_NAME",
            "USER_PROPGROUP_NAME",
            "USER_PROP_POINTER_NAME",
            "LIST_OF_STAGE_NAMES",
            "TOOL_MAPPING_DICTIONARY",
            "CODE_EXAMPLE_PYTHON_SCRIPT",
        ),
    ),
}


def get_template(template_id: TemplateId) -> PromptTemplate:
    return TEMPLATES[template_id]


def render(template: PromptTemplate, bindings: dict[str, str]) -> RenderedPrompt:
    """Substitute every placeholder and return the rendered prompt.

    All required placeholders must be bound to nonempty strings; bindings for
    names the template does not declare are rejected.
    """
    required = set(template.required_placeholders)
    for name in bindings:
        if name not in required:
            raise UnknownPlaceholder(
                f"template {template.id.value} has no placeholder {name!r}"
            )
    for name in template.required_placeholders:
        if name not in bindings:
            raise MissingPlaceholder(
                f"template {template.id.value} needs a binding for {name!r}"
            )
        if not bindings[name]:
            raise MissingPlaceholder(
                f"template {template.id.value}: binding for {name!r} is empty"
            )

    parts = PLACEHOLDER_RE.split(template.body)
    # re.split alternates literal text and captured placeholder names.
    rendered = []
    for i, part in enumerate(parts):
        rendered.append(bindings[part] if i % 2 else part)
    return RenderedPrompt(
        template_id=template.id, text="".join(rendered), bindings=dict(bindings)
    )
