# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: UV Unwrapping",
    "description": "Scaffolded panel for: UV unwrap a cube",
    "version": (1, 0, 0),
    "blender": (3, 6, 0),
    "location": "View3D > Sidebar > Scaffold",
    "category": "Interface",
}

import bpy
from bpy.props import EnumProperty, PointerProperty, StringProperty
from bpy.types import Operator, Panel, PropertyGroup

# Composed help text per tool: description, domain concepts, and the
# shortcut / menu path locating the tool in the native interface.
TOOL_HINTS = {
    "bpy.ops.mesh.select_mode": "Switch to edge select mode before picking seams.\nShortcut: 2\nMenu: 3D Viewport Header > Select Mode > Edge",
    "bpy.ops.mesh.mark_seam": "Mark the selected edges as UV seams.\nConcept: An edge marked as a cut line; the mesh is split along seams when it is unwrapped.\nShortcut: Ctrl+E\nMenu: Edge > Mark Seam",
    "bpy.ops.mesh.loop_multi_select": "Grow the selection into full edge loops.\nConcept: A connected ring of edges flowing around the mesh; loops make quick, clean seam selections.\nShortcut: Alt+Click\nMenu: Select > Select Loops > Edge Loops",
    "bpy.ops.mesh.region_to_loop": "Select the boundary loop around the current region.\nConcept: A connected ring of edges flowing around the mesh; loops make quick, clean seam selections.\nMenu: Select > Select Loops > Select Boundary Loop",
    "bpy.ops.uv.unwrap": "Flatten the mesh into UV islands using the marked seams.\nConcept: A connected patch of faces in the 2D layout; an island moves and scales as one piece.\nShortcut: U\nMenu: UV > Unwrap",
    "bpy.ops.uv.pack_islands": "Arrange all islands to fill the UV space without overlaps.\nConcept: A connected patch of faces in the 2D layout; an island moves and scales as one piece.\nMenu: UV > Pack Islands",
    "bpy.ops.uv.average_islands_scale": "Rescale islands to matching texel density.\nConcept: A connected patch of faces in the 2D layout; an island moves and scales as one piece.\nMenu: UV > Average Islands Scale",
    "bpy.ops.uv.minimize_stretch": "Relax the selected UVs to reduce stretching.\nConcept: Distortion where a texture is squeezed or pulled because 3D faces and their UV shapes disagree.\nMenu: UV > Minimize Stretch",
    "context.tool_settings.use_uv_select_sync": "Keep 3D and UV selections in sync while inspecting.\nMenu: UV Editor Header > UV Sync Selection",
    "bpy.ops.uv.select_overlap": "Highlight overlapping UV faces.\nConcept: Faces whose UV shapes sit on top of each other and would receive the same texture pixels.\nMenu: Select > Select Overlap",
    "bpy.ops.uv.seams_from_islands": "Mark seams along the current island boundaries.\nMenu: UV > Seams From Islands",
}


class UvUnwrapScaffoldSettings(PropertyGroup):
    expertise_level: EnumProperty(
        name="Complexity Level",
        description="How much of the toolset the panel reveals",
        items=(
            ("BASIC", "Basic", "Show only the fundamental tools"),
            ("INTERMEDIATE", "Intermediate", "Add refinement and selection aids"),
            ("ADVANCED", "Advanced", "Reveal the complete toolset for this task"),
        ),
        default="BASIC",
    )


class UV_UNWRAP_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "uv_unwrap_scaffold.invoke_tool"
    bl_label = "Scaffold Tool"
    bl_options = {"INTERNAL"}

    tool_id: StringProperty(options={"HIDDEN"})
    tooltip: StringProperty(options={"HIDDEN"})

    @classmethod
    def description(cls, context, properties):
        return properties.tooltip or None

    def execute(self, context):
        target = bpy.ops
        for segment in self.tool_id.split(".")[2:]:
            target = getattr(target, segment)
        target("INVOKE_DEFAULT")
        return {"FINISHED"}


class VIEW3D_PT_uv_unwrap_scaffold(Panel):
    bl_idname = "VIEW3D_PT_uv_unwrap_scaffold"
    bl_label = "Scaffold: UV Unwrapping"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.uv_unwrap_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 3
        box = layout.box()
        box.label(text="Marking Seams")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Edge Select")
            tool.tool_id = "bpy.ops.mesh.select_mode"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.select_mode"]
            shown = True
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Mark Seam")
            tool.tool_id = "bpy.ops.mesh.mark_seam"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.mark_seam"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Select Edge Loops")
            tool.tool_id = "bpy.ops.mesh.loop_multi_select"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.loop_multi_select"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Select Boundary Loop")
            tool.tool_id = "bpy.ops.mesh.region_to_loop"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.region_to_loop"]
            shown = True

        # Stage 2 of 3
        box = layout.box()
        box.label(text="Unwrapping & Editing")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Unwrap")
            tool.tool_id = "bpy.ops.uv.unwrap"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.unwrap"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Pack Islands")
            tool.tool_id = "bpy.ops.uv.pack_islands"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.pack_islands"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Average Islands Scale")
            tool.tool_id = "bpy.ops.uv.average_islands_scale"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.average_islands_scale"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Minimize Stretch")
            tool.tool_id = "bpy.ops.uv.minimize_stretch"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.minimize_stretch"]
            shown = True

        # Stage 3 of 3
        box = layout.box()
        box.label(text="Checking & Visualization")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            box.prop(context.tool_settings, "use_uv_select_sync", text="UV Sync Selection")
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Select Overlap")
            tool.tool_id = "bpy.ops.uv.select_overlap"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.select_overlap"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_unwrap_scaffold.invoke_tool", text="Seams From Islands")
            tool.tool_id = "bpy.ops.uv.seams_from_islands"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.seams_from_islands"]
            shown = True


_CLASSES = (
    UvUnwrapScaffoldSettings,
    UV_UNWRAP_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_uv_unwrap_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.uv_unwrap_scaffold = PointerProperty(type=UvUnwrapScaffoldSettings)


def unregister():
    del bpy.types.Scene.uv_unwrap_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
