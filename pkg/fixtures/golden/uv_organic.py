# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Organic UV Unwrapping",
    "description": "Scaffolded panel for: UV unwrap an organic character model",
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
    "bpy.ops.mesh.mark_seam": "Mark the selected edges as UV seams.\nConcept: Seams routed along muscle lines and creases hide texture cuts on organic shapes.\nShortcut: Ctrl+E\nMenu: Edge > Mark Seam",
    "bpy.ops.mesh.shortest_path_select": "Select the shortest edge path between two picked points.\nShortcut: Ctrl+Click\nMenu: Select > Select Shortest Path",
    "bpy.ops.uv.unwrap": "Flatten the mesh into UV islands using the marked seams.\nShortcut: U\nMenu: UV > Unwrap",
    "bpy.ops.uv.follow_active_quads": "Unfold quads to follow the active face's grid.\nConcept: The even distribution of UV faces that keeps a texture steady while a curved surface moves.\nMenu: UV > Follow Active Quads",
    "bpy.ops.uv.minimize_stretch": "Relax the selected UVs to reduce stretching.\nMenu: UV > Minimize Stretch",
    "bpy.ops.uv.pack_islands": "Arrange all islands to fill the UV space without overlaps.\nMenu: UV > Pack Islands",
    "bpy.ops.uv.average_islands_scale": "Rescale islands to matching texel density.\nMenu: UV > Average Islands Scale",
}


class UvOrganicScaffoldSettings(PropertyGroup):
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


class UV_ORGANIC_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "uv_organic_scaffold.invoke_tool"
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


class VIEW3D_PT_uv_organic_scaffold(Panel):
    bl_idname = "VIEW3D_PT_uv_organic_scaffold"
    bl_label = "Scaffold: Organic UV Unwrapping"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.uv_organic_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 3
        box = layout.box()
        box.label(text="Seam Placement on Curved Forms")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Mark Seam")
            tool.tool_id = "bpy.ops.mesh.mark_seam"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.mark_seam"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Select Shortest Path")
            tool.tool_id = "bpy.ops.mesh.shortest_path_select"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.shortest_path_select"]
            shown = True

        # Stage 2 of 3
        box = layout.box()
        box.label(text="Flatten & Preserve Surface Flow")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Unwrap")
            tool.tool_id = "bpy.ops.uv.unwrap"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.unwrap"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Follow Active Quads")
            tool.tool_id = "bpy.ops.uv.follow_active_quads"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.follow_active_quads"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Minimize Stretch")
            tool.tool_id = "bpy.ops.uv.minimize_stretch"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.minimize_stretch"]
            shown = True

        # Stage 3 of 3
        box = layout.box()
        box.label(text="Refine for Animation")
        shown = False
        if level in ("INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Pack Islands")
            tool.tool_id = "bpy.ops.uv.pack_islands"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.pack_islands"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_organic_scaffold.invoke_tool", text="Average Islands Scale")
            tool.tool_id = "bpy.ops.uv.average_islands_scale"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.average_islands_scale"]
            shown = True


_CLASSES = (
    UvOrganicScaffoldSettings,
    UV_ORGANIC_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_uv_organic_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.uv_organic_scaffold = PointerProperty(type=UvOrganicScaffoldSettings)


def unregister():
    del bpy.types.Scene.uv_organic_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
