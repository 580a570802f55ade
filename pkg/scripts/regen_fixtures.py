#!/usr/bin/env python3
"""Regenerate everything under fixtures/: spec documents, the catalog
snapshot, recorded prompt transcripts, and the golden add-ons the test
suite compares against.

Run from the repo root after changing fixture content, templates, or the
emitter, then review the diff:

    python3 scripts/regen_fixtures.py
"""

import sys
from pathlib import Path

from scaffoldc import (
    ComplexityLevel,
    Concept,
    NativeHint,
    PanelConfig,
    ScaffoldSpec,
    Severity,
    Stage,
    Tool,
    ToolKind,
    TemplateId,
    default_visibility,
    emit,
    emit_manifest,
    get_template,
    load_catalog,
    record_fixture,
    render,
    spec_to_json,
    validate,
)
from scaffoldc.core import canonical_json

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

B = ComplexityLevel.BASIC
I = ComplexityLevel.INTERMEDIATE
A = ComplexityLevel.ADVANCED
OP = ToolKind.OPERATOR
PROP = ToolKind.PROPERTY


def tool(identifier, kind, label, expertise, rationale, *, context=(), shortcut=None,
         menu=(), tooltip="", tags=()):
    hint = None
    if shortcut or menu:
        hint = NativeHint(shortcut=shortcut, menu_path=tuple(menu))
    return Tool(
        identifier=identifier,
        kind=kind,
        ui_label=label,
        rationale=rationale,
        context_requirements=tuple(context),
        expertise=expertise,
        visibility=default_visibility(expertise),
        native_hint=hint,
        tooltip=tooltip,
        concept_tags=tuple(tags),
    )


# --- Task 1: UV unwrapping (the golden fixture) ------------------------------

TASK1 = ScaffoldSpec(
    task_title="UV unwrap a cube",
    task_description="Perform UV unwrapping on a cube so a 2D texture can be "
                     "projected onto its surface.",
    stages=(
        Stage(
            name="Marking Seams",
            description="Select edges and mark them as seams to define where "
                        "the mesh will be cut.",
            ordinal=0,
            concepts=(
                Concept(
                    name="seam",
                    definition="An edge marked as a cut line; the mesh is split "
                               "along seams when it is unwrapped.",
                    related_tool_ids=("bpy.ops.mesh.mark_seam",),
                ),
                Concept(
                    name="edge loop",
                    definition="A connected ring of edges flowing around the mesh; "
                               "loops make quick, clean seam selections.",
                    related_tool_ids=(
                        "bpy.ops.mesh.loop_multi_select",
                        "bpy.ops.mesh.region_to_loop",
                    ),
                ),
            ),
            tools=(
                tool("bpy.ops.mesh.select_mode", OP, "Edge Select", B,
                     "Switches selection to edges so seams can be picked.",
                     context=("Edit Mode",), shortcut="2",
                     menu=("3D Viewport Header", "Select Mode", "Edge"),
                     tooltip="Switch to edge select mode before picking seams."),
                tool("bpy.ops.mesh.mark_seam", OP, "Mark Seam", B,
                     "Marks the selected edges as seams for the unwrapper.",
                     context=("Edit Mode", "edges selected"), shortcut="Ctrl+E",
                     menu=("Edge", "Mark Seam"),
                     tooltip="Mark the selected edges as UV seams.",
                     tags=("seam",)),
                tool("bpy.ops.mesh.loop_multi_select", OP, "Select Edge Loops", I,
                     "Extends the selection to whole edge loops, a fast way to "
                     "lay seams around a shape.",
                     context=("Edit Mode",), shortcut="Alt+Click",
                     menu=("Select", "Select Loops", "Edge Loops"),
                     tooltip="Grow the selection into full edge loops.",
                     tags=("edge loop",)),
                tool("bpy.ops.mesh.region_to_loop", OP, "Select Boundary Loop", A,
                     "Converts a face region into its boundary loop for precise "
                     "seam placement.",
                     context=("Edit Mode", "faces selected"),
                     menu=("Select", "Select Loops", "Select Boundary Loop"),
                     tooltip="Select the boundary loop around the current region.",
                     tags=("edge loop",)),
            ),
        ),
        Stage(
            name="Unwrapping & Editing",
            description="Unwrap the mesh into UV islands and arrange the "
                        "resulting layout.",
            ordinal=1,
            concepts=(
                Concept(
                    name="UV island",
                    definition="A connected patch of faces in the 2D layout; an "
                               "island moves and scales as one piece.",
                    related_tool_ids=(
                        "bpy.ops.uv.unwrap",
                        "bpy.ops.uv.pack_islands",
                        "bpy.ops.uv.average_islands_scale",
                    ),
                ),
                Concept(
                    name="stretch",
                    definition="Distortion where a texture is squeezed or pulled "
                               "because 3D faces and their UV shapes disagree.",
                    related_tool_ids=("bpy.ops.uv.minimize_stretch",),
                ),
            ),
            tools=(
                tool("bpy.ops.uv.unwrap", OP, "Unwrap", B,
                     "Performs the primary UV unwrapping calculation based on "
                     "marked seams.",
                     context=("Edit Mode", "faces selected"), shortcut="U",
                     menu=("UV", "Unwrap"),
                     tooltip="Flatten the mesh into UV islands using the marked seams.",
                     tags=("UV island",)),
                tool("bpy.ops.uv.pack_islands", OP, "Pack Islands", I,
                     "Repacks islands to use the 0-1 UV space efficiently.",
                     context=("UV Editor", "UVs selected"),
                     menu=("UV", "Pack Islands"),
                     tooltip="Arrange all islands to fill the UV space without overlaps.",
                     tags=("UV island",)),
                tool("bpy.ops.uv.average_islands_scale", OP, "Average Islands Scale", A,
                     "Equalizes texel density across islands so textures stay uniform.",
                     context=("UV Editor",),
                     menu=("UV", "Average Islands Scale"),
                     tooltip="Rescale islands to matching texel density.",
                     tags=("UV island",)),
                tool("bpy.ops.uv.minimize_stretch", OP, "Minimize Stretch", A,
                     "Relaxes UVs to reduce angle distortion in the layout.",
                     context=("UV Editor", "UVs selected"),
                     menu=("UV", "Minimize Stretch"),
                     tooltip="Relax the selected UVs to reduce stretching.",
                     tags=("stretch",)),
            ),
        ),
        Stage(
            name="Checking & Visualization",
            description="Inspect the unwrapped layout for stretching or overlaps "
                        "before texturing.",
            ordinal=2,
            concepts=(
                Concept(
                    name="overlap",
                    definition="Faces whose UV shapes sit on top of each other and "
                               "would receive the same texture pixels.",
                    related_tool_ids=("bpy.ops.uv.select_overlap",),
                ),
            ),
            tools=(
                tool("context.tool_settings.use_uv_select_sync", PROP,
                     "UV Sync Selection", B,
                     "Mirrors mesh and UV selections so problem faces are easy "
                     "to cross-check.",
                     context=("UV Editor",),
                     menu=("UV Editor Header", "UV Sync Selection"),
                     tooltip="Keep 3D and UV selections in sync while inspecting."),
                tool("bpy.ops.uv.select_overlap", OP, "Select Overlap", I,
                     "Selects faces whose UVs overlap so collisions can be fixed.",
                     context=("UV Editor",),
                     menu=("Select", "Select Overlap"),
                     tooltip="Highlight overlapping UV faces.",
                     tags=("overlap",)),
                tool("bpy.ops.uv.seams_from_islands", OP, "Seams From Islands", A,
                     "Rebuilds seam marks from island borders to verify where the "
                     "layout is actually cut.",
                     context=("Edit Mode",),
                     menu=("UV", "Seams From Islands"),
                     tooltip="Mark seams along the current island boundaries."),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_uv_unwrap_scaffold",
        panel_label="Scaffold: UV Unwrapping",
        category="Scaffold",
        propgroup_name="UvUnwrapScaffoldSettings",
        pointer_name="uv_unwrap_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)


# --- Task 2: walk cycle -------------------------------------------------------

TASK2 = ScaffoldSpec(
    task_title="Build a human walk cycle",
    task_description="Animate a looping walk cycle on a rigged human character.",
    stages=(
        Stage(
            name="Key Posing",
            description="Block in the contact, down, passing, and up poses that "
                        "define the stride.",
            ordinal=0,
            concepts=(
                Concept(
                    name="key pose",
                    definition="A stored pose on a frame that anchors the motion; "
                               "the walk reads from a few strong key poses.",
                    related_tool_ids=(
                        "bpy.ops.anim.keyframe_insert",
                        "bpy.ops.pose.breakdown",
                    ),
                ),
                Concept(
                    name="pose flipping",
                    definition="Mirroring a pose to the other side of the body; "
                               "strides repeat with left and right swapped.",
                    related_tool_ids=("bpy.ops.pose.copy", "bpy.ops.pose.paste"),
                ),
            ),
            tools=(
                tool("bpy.ops.anim.keyframe_insert", OP, "Insert Keyframe", B,
                     "Stores the current pose on the timeline.",
                     context=("Pose Mode",), shortcut="I",
                     menu=("Pose", "Animation", "Insert Keyframe"),
                     tooltip="Key the selected bones at the current frame.",
                     tags=("key pose",)),
                tool("bpy.ops.pose.copy", OP, "Copy Pose", B,
                     "Copies the selected bone pose for reuse.",
                     context=("Pose Mode",), shortcut="Ctrl+C",
                     menu=("Pose", "Copy Pose"),
                     tooltip="Copy the selected bones' pose.",
                     tags=("pose flipping",)),
                tool("bpy.ops.pose.paste", OP, "Paste Pose Flipped", I,
                     "Pastes the copied pose mirrored, turning one stride into "
                     "its opposite.",
                     context=("Pose Mode",), shortcut="Ctrl+Shift+V",
                     menu=("Pose", "Paste Pose Flipped"),
                     tooltip="Paste the copied pose mirrored onto the other side.",
                     tags=("pose flipping",)),
                tool("bpy.ops.pose.breakdown", OP, "Pose Breakdowner", A,
                     "Blends an in-between pose between neighboring keys.",
                     context=("Pose Mode",), shortcut="Shift+E",
                     menu=("Pose", "In-Betweens", "Pose Breakdowner"),
                     tooltip="Slide an in-between pose between the surrounding keys.",
                     tags=("key pose",)),
            ),
        ),
        Stage(
            name="Timing & Interpolation",
            description="Tune frame spacing and curve easing so the stride has "
                        "believable weight.",
            ordinal=1,
            concepts=(
                Concept(
                    name="timing",
                    definition="How many frames each pose change takes; spacing "
                               "gives the walk its weight and rhythm.",
                    related_tool_ids=("context.scene.frame_end",),
                ),
                Concept(
                    name="interpolation",
                    definition="How values blend between keys; easing changes the "
                               "feel of a motion.",
                    related_tool_ids=(
                        "bpy.ops.graph.interpolation_type",
                        "bpy.ops.graph.easing_type",
                    ),
                ),
            ),
            tools=(
                tool("context.scene.frame_end", PROP, "End Frame", B,
                     "Sets the loop length of the cycle.",
                     menu=("Output Properties", "Frame Range"),
                     tooltip="Last frame of the walk loop.",
                     tags=("timing",)),
                tool("bpy.ops.graph.interpolation_type", OP, "Set Interpolation", I,
                     "Switches selected keys between constant, linear, and bezier "
                     "blending.",
                     context=("Graph Editor", "keys selected"), shortcut="T",
                     menu=("Key", "Interpolation Mode"),
                     tooltip="Change how the selected keys blend.",
                     tags=("interpolation",)),
                tool("bpy.ops.graph.easing_type", OP, "Set Easing", A,
                     "Controls acceleration in and out of keys for snappier or "
                     "softer motion.",
                     context=("Graph Editor", "keys selected"), shortcut="Ctrl+E",
                     menu=("Key", "Easing Mode"),
                     tooltip="Change easing in and out of the selected keys.",
                     tags=("interpolation",)),
            ),
        ),
        Stage(
            name="Polish & Secondary Motion",
            description="Layer follow-through and clean the final curves so the "
                        "cycle loops smoothly.",
            ordinal=2,
            concepts=(
                Concept(
                    name="secondary motion",
                    definition="Follow-through movement driven by the main action, "
                               "like arm swing trailing the torso.",
                    related_tool_ids=("bpy.ops.pose.constraint_add",),
                ),
                Concept(
                    name="bone constraint",
                    definition="A rule that drives one bone from another, useful "
                               "for automated follow-through.",
                    related_tool_ids=("bpy.ops.pose.constraint_add",),
                ),
            ),
            tools=(
                tool("bpy.ops.screen.animation_play", OP, "Play Animation", B,
                     "Loops playback so the cycle can be judged in motion.",
                     shortcut="Spacebar", menu=("Playback", "Play Animation"),
                     tooltip="Toggle looping playback."),
                tool("bpy.ops.pose.propagate", OP, "Propagate Pose", I,
                     "Copies the current pose forward to matching keyframes to "
                     "fix loop seams.",
                     context=("Pose Mode",), menu=("Pose", "Propagate"),
                     tooltip="Push the current pose onto later keyframes."),
                tool("bpy.ops.pose.constraint_add", OP, "Add Bone Constraint", A,
                     "Adds a constraint so trailing bones follow automatically.",
                     context=("Pose Mode", "bone selected"), shortcut="Ctrl+Shift+C",
                     menu=("Pose", "Constraints", "Add Constraint"),
                     tooltip="Constrain the active bone for automatic follow-through.",
                     tags=("secondary motion", "bone constraint")),
                tool("bpy.ops.graph.clean", OP, "Clean Keyframes", A,
                     "Removes redundant keys so loop curves stay editable.",
                     context=("Graph Editor",), menu=("Key", "Clean Keyframes"),
                     tooltip="Delete keys that do not change the curve shape."),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_walk_cycle_scaffold",
        panel_label="Scaffold: Walk Cycle",
        category="Scaffold",
        propgroup_name="WalkCycleScaffoldSettings",
        pointer_name="walk_cycle_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)


# --- Variations ---------------------------------------------------------------

UV_ORGANIC = ScaffoldSpec(
    task_title="UV unwrap an organic character model",
    task_description="Unwrap a curved, organic mesh with seams that follow its "
                     "natural creases.",
    stages=(
        Stage(
            name="Seam Placement on Curved Forms",
            description="Define seams along natural creases so curved surfaces "
                        "flatten cleanly.",
            ordinal=0,
            concepts=(
                Concept(
                    name="seam flow",
                    definition="Seams routed along muscle lines and creases hide "
                               "texture cuts on organic shapes.",
                    related_tool_ids=("bpy.ops.mesh.mark_seam",),
                ),
            ),
            tools=(
                tool("bpy.ops.mesh.mark_seam", OP, "Mark Seam", B,
                     "Marks the selected edges as seams for the unwrapper.",
                     context=("Edit Mode", "edges selected"), shortcut="Ctrl+E",
                     menu=("Edge", "Mark Seam"),
                     tooltip="Mark the selected edges as UV seams.",
                     tags=("seam flow",)),
                tool("bpy.ops.mesh.shortest_path_select", OP, "Select Shortest Path", I,
                     "Selects the shortest edge run between two picks, which "
                     "follows creases well.",
                     context=("Edit Mode",), shortcut="Ctrl+Click",
                     menu=("Select", "Select Shortest Path"),
                     tooltip="Select the shortest edge path between two picked points."),
            ),
        ),
        Stage(
            name="Flatten & Preserve Surface Flow",
            description="Unwrap with methods that keep face angles stable when "
                        "the surface deforms.",
            ordinal=1,
            concepts=(
                Concept(
                    name="surface flow",
                    definition="The even distribution of UV faces that keeps a "
                               "texture steady while a curved surface moves.",
                    related_tool_ids=("bpy.ops.uv.follow_active_quads",),
                ),
            ),
            tools=(
                tool("bpy.ops.uv.unwrap", OP, "Unwrap", B,
                     "Performs the primary UV unwrapping calculation based on "
                     "marked seams.",
                     context=("Edit Mode", "faces selected"), shortcut="U",
                     menu=("UV", "Unwrap"),
                     tooltip="Flatten the mesh into UV islands using the marked seams."),
                tool("bpy.ops.uv.follow_active_quads", OP, "Follow Active Quads", A,
                     "Projects quads along the active face so the grid stays even "
                     "on curved surfaces.",
                     context=("Edit Mode", "active quad"),
                     menu=("UV", "Follow Active Quads"),
                     tooltip="Unfold quads to follow the active face's grid.",
                     tags=("surface flow",)),
                tool("bpy.ops.uv.minimize_stretch", OP, "Minimize Stretch", A,
                     "Relaxes UVs to reduce angle distortion in the layout.",
                     context=("UV Editor", "UVs selected"),
                     menu=("UV", "Minimize Stretch"),
                     tooltip="Relax the selected UVs to reduce stretching."),
            ),
        ),
        Stage(
            name="Refine for Animation",
            description="Balance island scale so textures stay accurate while the "
                        "surface deforms.",
            ordinal=2,
            concepts=(),
            tools=(
                tool("bpy.ops.uv.pack_islands", OP, "Pack Islands", I,
                     "Repacks islands to use the 0-1 UV space efficiently.",
                     context=("UV Editor", "UVs selected"),
                     menu=("UV", "Pack Islands"),
                     tooltip="Arrange all islands to fill the UV space without overlaps."),
                tool("bpy.ops.uv.average_islands_scale", OP, "Average Islands Scale", A,
                     "Equalizes texel density across islands so textures stay uniform.",
                     context=("UV Editor",),
                     menu=("UV", "Average Islands Scale"),
                     tooltip="Rescale islands to matching texel density."),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_uv_organic_scaffold",
        panel_label="Scaffold: Organic UV Unwrapping",
        category="Scaffold",
        propgroup_name="UvOrganicScaffoldSettings",
        pointer_name="uv_organic_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)

UV_HARD_SURFACE = ScaffoldSpec(
    task_title="UV unwrap a hard-surface mechanical model",
    task_description="Unwrap a machined, angular model with precise projection "
                     "tools and extra UV sets for decals.",
    stages=(
        Stage(
            name="Projection & Alignment",
            description="Create clean UV islands with precise projection tools.",
            ordinal=0,
            concepts=(
                Concept(
                    name="projection",
                    definition="Mapping faces flat from a chosen direction; ideal "
                               "for panels and machined parts.",
                    related_tool_ids=(
                        "bpy.ops.uv.smart_project",
                        "bpy.ops.uv.project_from_view",
                    ),
                ),
            ),
            tools=(
                tool("bpy.ops.uv.smart_project", OP, "Smart UV Project", B,
                     "Auto-projects the mesh using angle limits, a quick start "
                     "for angular shapes.",
                     context=("Edit Mode", "faces selected"),
                     menu=("UV", "Smart UV Project"),
                     tooltip="Automatically project islands using an angle limit.",
                     tags=("projection",)),
                tool("bpy.ops.uv.project_from_view", OP, "Project From View", I,
                     "Projects the selection flat from the current viewport angle.",
                     context=("Edit Mode", "faces selected"),
                     menu=("UV", "Project from View"),
                     tooltip="Project UVs straight from the viewing direction.",
                     tags=("projection",)),
                tool("bpy.ops.uv.align", OP, "Align UVs", A,
                     "Snaps selected UVs onto a shared axis for exact island edges.",
                     context=("UV Editor", "UVs selected"),
                     menu=("UV", "Align"),
                     tooltip="Align the selected UVs on one axis."),
            ),
        ),
        Stage(
            name="Multiple UV Sets & Decals",
            description="Manage extra UV channels for decals and detail textures.",
            ordinal=1,
            concepts=(
                Concept(
                    name="UV set",
                    definition="One of several UV layouts a mesh can carry; decals "
                               "often live on their own set.",
                    related_tool_ids=("bpy.ops.mesh.uv_texture_add",),
                ),
            ),
            tools=(
                tool("bpy.ops.mesh.uv_texture_add", OP, "Add UV Map", I,
                     "Adds another UV channel to the mesh for a decal layout.",
                     menu=("Object Data Properties", "UV Maps"),
                     tooltip="Create an additional UV map on the mesh.",
                     tags=("UV set",)),
                tool("bpy.ops.uv.cube_project", OP, "Cube Projection", A,
                     "Projects from six axis-aligned directions, handy for boxy "
                     "decal placement.",
                     context=("Edit Mode", "faces selected"),
                     menu=("UV", "Cube Projection"),
                     tooltip="Project UVs from the six cube directions."),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_uv_hard_surface_scaffold",
        panel_label="Scaffold: Hard-Surface UV",
        category="Scaffold",
        propgroup_name="UvHardSurfaceScaffoldSettings",
        pointer_name="uv_hard_surface_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)

WALK_EMOTIVE = ScaffoldSpec(
    task_title="Build an emotive walk cycle with personality",
    task_description="Layer mood into a walk cycle through exaggerated spine and "
                     "head poses, timing shifts, and secondary motion.",
    stages=(
        Stage(
            name="Reference & Attitude Posing",
            description="Study reference and exaggerate spine and head poses to "
                        "carry the mood.",
            ordinal=0,
            concepts=(
                Concept(
                    name="attitude pose",
                    definition="A key pose pushed to express emotion, read mostly "
                               "from the spine and head.",
                    related_tool_ids=("bpy.ops.pose.breakdown",),
                ),
            ),
            tools=(
                tool("bpy.ops.anim.keyframe_insert", OP, "Insert Keyframe", B,
                     "Stores the current pose on the timeline.",
                     context=("Pose Mode",), shortcut="I",
                     menu=("Pose", "Animation", "Insert Keyframe"),
                     tooltip="Key the selected bones at the current frame."),
                tool("bpy.ops.pose.breakdown", OP, "Pose Breakdowner", I,
                     "Blends an in-between pose, useful for pushing attitude "
                     "between keys.",
                     context=("Pose Mode",), shortcut="Shift+E",
                     menu=("Pose", "In-Betweens", "Pose Breakdowner"),
                     tooltip="Slide an in-between pose between the surrounding keys.",
                     tags=("attitude pose",)),
            ),
        ),
        Stage(
            name="Timing & Layered Motion",
            description="Shift timing and bake layered passes that sell the "
                        "personality.",
            ordinal=1,
            concepts=(
                Concept(
                    name="layered motion",
                    definition="Separate animation passes stacked on the base "
                               "walk, like a head bob added over the stride.",
                    related_tool_ids=("bpy.ops.nla.bake",),
                ),
            ),
            tools=(
                tool("context.scene.frame_current", PROP, "Current Frame", B,
                     "Scrubs the timeline while matching poses to the mood.",
                     menu=("Timeline", "Playhead"),
                     tooltip="The frame being edited."),
                tool("bpy.ops.graph.easing_type", OP, "Set Easing", I,
                     "Controls acceleration in and out of keys for snappier or "
                     "softer motion.",
                     context=("Graph Editor", "keys selected"), shortcut="Ctrl+E",
                     menu=("Key", "Easing Mode"),
                     tooltip="Change easing in and out of the selected keys."),
                tool("bpy.ops.nla.bake", OP, "Bake Action", A,
                     "Flattens layered passes into one action once the mood reads.",
                     context=("Pose Mode",),
                     menu=("Object", "Animation", "Bake Action"),
                     tooltip="Bake the layered animation into keyframes.",
                     tags=("layered motion",)),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_walk_emotive_scaffold",
        panel_label="Scaffold: Emotive Walk",
        category="Scaffold",
        propgroup_name="WalkEmotiveScaffoldSettings",
        pointer_name="walk_emotive_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)

WALK_STYLIZED = ScaffoldSpec(
    task_title="Build a stylized, abstract walk cycle",
    task_description="Animate a walk that departs from realism through "
                     "exaggerated form and non-realistic rhythm.",
    stages=(
        Stage(
            name="Exaggerated Form & Motion",
            description="Push poses beyond realism for artistic effect.",
            ordinal=0,
            concepts=(
                Concept(
                    name="exaggeration",
                    definition="Deliberately overshooting real proportions or "
                               "motion so the style reads clearly.",
                    related_tool_ids=("bpy.ops.pose.push",),
                ),
            ),
            tools=(
                tool("bpy.ops.transform.resize", OP, "Scale Pose", B,
                     "Scales bone transforms to push a silhouette larger or "
                     "smaller than life.",
                     context=("Pose Mode", "bones selected"), shortcut="S",
                     menu=("Pose", "Transform", "Scale"),
                     tooltip="Scale the selected bones."),
                tool("bpy.ops.pose.push", OP, "Push Pose", A,
                     "Exaggerates the current pose further away from the "
                     "surrounding keys.",
                     context=("Pose Mode",), shortcut="Ctrl+E",
                     menu=("Pose", "In-Betweens", "Push Pose"),
                     tooltip="Push the pose further from the neighboring keys.",
                     tags=("exaggeration",)),
            ),
        ),
        Stage(
            name="Rhythm & Interpolation Tricks",
            description="Use stepped and custom interpolation for non-realistic "
                        "rhythms.",
            ordinal=1,
            concepts=(
                Concept(
                    name="stepped rhythm",
                    definition="Holding poses with no in-between blending, a "
                               "stop-motion feel used in stylized animation.",
                    related_tool_ids=("bpy.ops.graph.interpolation_type",),
                ),
            ),
            tools=(
                tool("bpy.ops.graph.interpolation_type", OP, "Set Interpolation", I,
                     "Switches keys to constant blending for stepped, held poses.",
                     context=("Graph Editor", "keys selected"), shortcut="T",
                     menu=("Key", "Interpolation Mode"),
                     tooltip="Change how the selected keys blend.",
                     tags=("stepped rhythm",)),
                tool("bpy.ops.graph.easing_type", OP, "Set Easing", A,
                     "Shapes sharp accelerations for snappy, abstract movements.",
                     context=("Graph Editor", "keys selected"), shortcut="Ctrl+E",
                     menu=("Key", "Easing Mode"),
                     tooltip="Change easing in and out of the selected keys."),
            ),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_walk_stylized_scaffold",
        panel_label="Scaffold: Stylized Walk",
        category="Scaffold",
        propgroup_name="WalkStylizedScaffoldSettings",
        pointer_name="walk_stylized_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)

MINIMAL_EMPTY_STAGE = ScaffoldSpec(
    task_title="Sculpt a simple base mesh",
    task_description="Rough in the primary forms of a sculpt before detailing.",
    stages=(
        Stage(
            name="Blocking",
            description="Rough in the primary forms before any detailing.",
            ordinal=0,
            concepts=(),
            tools=(),
        ),
    ),
    panel=PanelConfig(
        panel_idname="VIEW3D_PT_sculpt_block_scaffold",
        panel_label="Scaffold: Sculpt Blocking",
        category="Scaffold",
        propgroup_name="SculptBlockScaffoldSettings",
        pointer_name="sculpt_block_scaffold",
    ),
    meta={"author": "scaffoldc fixtures", "source": "authored", "version": "1"},
)

SPECS = {
    "task1_uv_unwrapping": TASK1,
    "task2_walk_cycle": TASK2,
    "uv_organic": UV_ORGANIC,
    "uv_hard_surface": UV_HARD_SURFACE,
    "walk_emotive": WALK_EMOTIVE,
    "walk_stylized": WALK_STYLIZED,
    "minimal_empty_stage": MINIMAL_EMPTY_STAGE,
}


# --- Catalog snapshot ----------------------------------------------------------

def _entry(identifier, kind, description, modes=()):
    item = {"identifier": identifier, "kind": kind, "description": description}
    if modes:
        item["modes"] = list(modes)
    return item


CATALOG_ENTRIES = [
    # mesh editing
    _entry("bpy.ops.mesh.select_mode", "Operator", "Change the mesh selection mode", ["EDIT_MESH"]),
    _entry("bpy.ops.mesh.mark_seam", "Operator", "Mark or clear selected edges as UV seams", ["EDIT_MESH"]),
    _entry("bpy.ops.mesh.loop_multi_select", "Operator", "Select a loop of connected edges", ["EDIT_MESH"]),
    _entry("bpy.ops.mesh.region_to_loop", "Operator", "Select the boundary of the face region", ["EDIT_MESH"]),
    _entry("bpy.ops.mesh.shortest_path_select", "Operator", "Select the shortest path between two vertices", ["EDIT_MESH"]),
    _entry("bpy.ops.mesh.uv_texture_add", "Operator", "Add a UV map layer to the mesh"),
    _entry("bpy.ops.mesh.select_all", "Operator", "Change selection of all mesh elements", ["EDIT_MESH"]),
    # uv
    _entry("bpy.ops.uv.unwrap", "Operator", "Unwrap the mesh of the object being edited", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.pack_islands", "Operator", "Transform all islands so they fill the UV space", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.average_islands_scale", "Operator", "Average the size of separate UV islands", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.minimize_stretch", "Operator", "Reduce UV stretching by relaxing angles", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.select_overlap", "Operator", "Select all UV faces which overlap each other", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.seams_from_islands", "Operator", "Set mesh seams according to island setup", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.smart_project", "Operator", "Projection unwrap the selected faces", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.project_from_view", "Operator", "Project the UV vertices from the 3D view", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.cube_project", "Operator", "Project the UV vertices of the mesh over a cube", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.follow_active_quads", "Operator", "Follow UVs from active quads along continuous face loops", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.align", "Operator", "Align selected UV vertices on a line", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.pin", "Operator", "Set or clear the pinned state of UV vertices", ["EDIT_MESH"]),
    _entry("bpy.ops.uv.select_linked", "Operator", "Select all UV vertices linked to the selection", ["EDIT_MESH"]),
    # animation / pose
    _entry("bpy.ops.anim.keyframe_insert", "Operator", "Insert keyframes on the current frame"),
    _entry("bpy.ops.pose.copy", "Operator", "Copy the current pose of the selected bones", ["POSE"]),
    _entry("bpy.ops.pose.paste", "Operator", "Paste the stored pose on the current pose", ["POSE"]),
    _entry("bpy.ops.pose.breakdown", "Operator", "Create a suitable breakdown pose on the current frame", ["POSE"]),
    _entry("bpy.ops.pose.push", "Operator", "Exaggerate the current pose in regards to the breakdown pose", ["POSE"]),
    _entry("bpy.ops.pose.propagate", "Operator", "Copy selected aspects of the current pose to subsequent poses", ["POSE"]),
    _entry("bpy.ops.pose.constraint_add", "Operator", "Add a constraint to the active bone", ["POSE"]),
    _entry("bpy.ops.graph.interpolation_type", "Operator", "Set the interpolation type for selected keyframes"),
    _entry("bpy.ops.graph.easing_type", "Operator", "Set the easing type for selected keyframes"),
    _entry("bpy.ops.graph.clean", "Operator", "Simplify F-Curves by removing closely spaced keyframes"),
    _entry("bpy.ops.nla.bake", "Operator", "Bake all selected objects' actions"),
    _entry("bpy.ops.screen.animation_play", "Operator", "Play animation"),
    # transform / object
    _entry("bpy.ops.transform.resize", "Operator", "Scale selected items"),
    _entry("bpy.ops.transform.translate", "Operator", "Move selected items"),
    _entry("bpy.ops.object.mode_set", "Operator", "Set the object interaction mode"),
    # properties
    _entry("context.tool_settings.use_uv_select_sync", "Property", "Keep UV and edit mode mesh selection in sync"),
    _entry("context.scene.frame_end", "Property", "Final frame of the playback and rendering range"),
    _entry("context.scene.frame_start", "Property", "First frame of the playback and rendering range"),
    _entry("context.scene.frame_current", "Property", "Current frame of the playback and rendering range"),
]


# --- Recorded transcripts -------------------------------------------------------

UV_ANALYZE_RESPONSE = """\
Here are the conceptual stages for this task:

1. **Marking Seams**: Select edges and mark them as seams to define where the mesh will be cut.
2. **Unwrapping & Editing**: Unwrap the mesh into UV islands and arrange the resulting layout.
3. **Checking & Visualization**: Inspect the unwrapped layout for stretching or overlaps before texturing.
"""

UV_STAGE_RESPONSES = {
    "Marking Seams": """\
– Identifier: bpy.ops.mesh.select_mode
– Type: Operator
– Rationale: Switches the mesh selection mode to edges so seams can be picked.
– Context: Requires Edit Mode.
– Expertise: BEGINNER - Core setup step before any seam work.

– Identifier: bpy.ops.mesh.mark_seam
– Type: Operator
– Rationale: Marks the selected edges as seams for the unwrapper.
– Context: Requires Edit Mode, edges selected. Usually invoked via the Ctrl+E edge menu.
– Expertise: BEGINNER - Fundamental operation for defining cuts.

– Identifier: bpy.ops.mesh.loop_multi_select
– Type: Operator
– Rationale: Extends the selection to whole edge loops for fast seam placement.
– Context: Requires Edit Mode.
– Expertise: INTERMEDIATE - Requires understanding of edge flow.
""",
    "Unwrapping & Editing": """\
– Identifier: bpy.ops.uv.unwrap
– Type: Operator
– Rationale: Performs the primary UV unwrapping calculation based on marked seams.
– Context: Requires Edit Mode, faces selected. Usually invoked via the U key menu.
– Expertise: BEGINNER - Fundamental operation after marking seams.

– Identifier: bpy.ops.uv.pack_islands
– Type: Operator
– Rationale: Repacks the resulting islands to use the UV space efficiently.
– Context: Requires the UV Editor with UVs selected.
– Expertise: INTERMEDIATE - Requires understanding of island layout.

– Identifier: bpy.ops.uv.minimize_stretch
– Type: Operator
– Rationale: Relaxes the UVs to reduce angle distortion in the layout.
– Context: Requires the UV Editor with UVs selected.
– Expertise: EXPERT - Used for fine distortion control.
""",
    "Checking & Visualization": """\
– Identifier: context.tool_settings.use_uv_select_sync
– Type: Property
– Rationale: Mirrors mesh and UV selections so problem faces are easy to cross-check.
– Context: Shown in the UV Editor header.
– Expertise: BEGINNER - Simple toggle used while inspecting.

– Identifier: bpy.ops.uv.select_overlap
– Type: Operator
– Rationale: Selects faces whose UVs overlap so collisions can be fixed.
– Context: Requires the UV Editor.
– Expertise: INTERMEDIATE - Interpreting the result takes practice.
""",
}

# Used by the FixtureMiss test: the analysis is recorded, the per-stage
# tool-selection response deliberately is not.
PAWN_ANALYZE_RESPONSE = """\
1. **Blocking**: Rough in the silhouette of the pawn with primitive shapes.
"""

# Used by the strict-toggle test: one identifier is absent from the catalog.
BARREL_ANALYZE_RESPONSE = """\
1. **Painting Setup**: Prepare the model and brushes for texture painting.
"""

BARREL_STAGE_RESPONSES = {
    "Painting Setup": """\
– Identifier: bpy.ops.object.mode_set
– Type: Operator
– Rationale: Switches the object into the mode needed for painting.
– Context: Requires an active object.
– Expertise: BEGINNER - Core mode change.

– Identifier: bpy.ops.paint.texture_paint_toggle
– Type: Operator
– Rationale: Enters texture paint mode on the active object.
– Context: Requires an active mesh object.
– Expertise: BEGINNER - Entry point for painting.
""",
}

PANELS = {
    "uv_unwrap": {
        "panel-idname": "VIEW3D_PT_uv_pipeline_scaffold",
        "panel-label": "Scaffold: UV Pipeline",
        "category": "Scaffold",
        "propgroup-name": "UvPipelineScaffoldSettings",
        "pointer-name": "uv_pipeline_scaffold",
    },
    "generic": {
        "panel-idname": "VIEW3D_PT_generic_scaffold",
        "panel-label": "Scaffold Panel",
        "category": "Scaffold",
        "propgroup-name": "GenericScaffoldSettings",
        "pointer-name": "generic_scaffold",
    },
}


def record_transcripts(transcript_dir: Path) -> None:
    analysis = get_template(TemplateId.WORKFLOW_ANALYSIS)
    selection = get_template(TemplateId.TOOL_SELECTION)

    def record_analysis(task: str, response: str):
        rendered = render(analysis, {"USER TASK DESCRIPTION": task})
        record_fixture(transcript_dir, rendered.text, response)

    def record_selection(name: str, description: str, response: str):
        rendered = render(
            selection, {"STAGE NAME": name, "STAGE DESCRIPTION": description}
        )
        record_fixture(transcript_dir, rendered.text, response)

    record_analysis("UV unwrap a cube", UV_ANALYZE_RESPONSE)
    from scaffoldc import parse_stages

    for outline in parse_stages(UV_ANALYZE_RESPONSE):
        record_selection(outline.name, outline.description,
                         UV_STAGE_RESPONSES[outline.name])

    record_analysis("Model a chess pawn", PAWN_ANALYZE_RESPONSE)

    record_analysis("Texture paint a barrel", BARREL_ANALYZE_RESPONSE)
    for outline in parse_stages(BARREL_ANALYZE_RESPONSE):
        record_selection(outline.name, outline.description,
                         BARREL_STAGE_RESPONSES[outline.name])


def main() -> int:
    specs_dir = FIXTURES / "specs"
    golden_dir = FIXTURES / "golden"
    catalog_dir = FIXTURES / "catalog"
    transcript_dir = FIXTURES / "transcripts"
    panels_dir = FIXTURES / "panels"
    for directory in (specs_dir, golden_dir, catalog_dir, transcript_dir, panels_dir):
        directory.mkdir(parents=True, exist_ok=True)

    catalog_path = catalog_dir / "blender_36.json"
    catalog_path.write_text(canonical_json(CATALOG_ENTRIES), encoding="utf-8", newline="\n")
    catalog = load_catalog(catalog_path.read_text(encoding="utf-8"), source="blender-3.6")
    print(f"catalog: {len(catalog)} entries -> {catalog_path}")

    for name, spec in SPECS.items():
        diagnostics = validate(spec, catalog)
        errors = [d for d in diagnostics if d.severity is Severity.ERROR]
        if errors:
            for d in errors:
                print(f"  {name}: {d.code} {d.location} {d.message}", file=sys.stderr)
            return 1
        (specs_dir / f"{name}.json").write_text(spec_to_json(spec), encoding="utf-8", newline="\n")
        addon = emit(spec)
        (golden_dir / f"{name}.py").write_text(addon.source, encoding="utf-8", newline="\n")
        (golden_dir / f"{name}.manifest.json").write_text(
            emit_manifest(addon), encoding="utf-8"
        )
        print(f"spec+golden: {name} ({addon.manifest.stage_count} stages, "
              f"{addon.manifest.tool_count} tools)")

    for name, panel in PANELS.items():
        (panels_dir / f"{name}.json").write_text(
            canonical_json(panel), encoding="utf-8"
        )

    record_transcripts(transcript_dir)
    count = len(list(transcript_dir.iterdir()))
    print(f"transcripts: {count} recorded responses -> {transcript_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
