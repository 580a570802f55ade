# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Hard-Surface UV",
    "description": "Scaffolded panel for: UV unwrap a hard-surface mechanical model",
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
    "bpy.ops.uv.smart_project": "Automatically project islands using an angle limit.\nConcept: Mapping faces flat from a chosen direction; ideal for panels and machined parts.\nMenu: UV > Smart UV Project",
    "bpy.ops.uv.project_from_view": "Project UVs straight from the viewing direction.\nConcept: Mapping faces flat from a chosen direction; ideal for panels and machined parts.\nMenu: UV > Project from View",
    "bpy.ops.uv.align": "Align the selected UVs on one axis.\nMenu: UV > Align",
    "bpy.ops.mesh.uv_texture_add": "Create an additional UV map on the mesh.\nConcept: One of several UV layouts a mesh can carry; decals often live on their own set.\nMenu: Object Data Properties > UV Maps",
    "bpy.ops.uv.cube_project": "Project UVs from the six cube directions.\nMenu: UV > Cube Projection",
}


class UvHardSurfaceScaffoldSettings(PropertyGroup):
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


class UV_HARD_SURFACE_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "uv_hard_surface_scaffold.invoke_tool"
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


class VIEW3D_PT_uv_hard_surface_scaffold(Panel):
    bl_idname = "VIEW3D_PT_uv_hard_surface_scaffold"
    bl_label = "Scaffold: Hard-Surface UV"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.uv_hard_surface_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 2
        box = layout.box()
        box.label(text="Projection & Alignment")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_hard_surface_scaffold.invoke_tool", text="Smart UV Project")
            tool.tool_id = "bpy.ops.uv.smart_project"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.smart_project"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("uv_hard_surface_scaffold.invoke_tool", text="Project From View")
            tool.tool_id = "bpy.ops.uv.project_from_view"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.project_from_view"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_hard_surface_scaffold.invoke_tool", text="Align UVs")
            tool.tool_id = "bpy.ops.uv.align"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.align"]
            shown = True

        # Stage 2 of 2
        box = layout.box()
        box.label(text="Multiple UV Sets & Decals")
        shown = False
        if level in ("INTERMEDIATE", "ADVANCED"):
            tool = box.operator("uv_hard_surface_scaffold.invoke_tool", text="Add UV Map")
            tool.tool_id = "bpy.ops.mesh.uv_texture_add"
            tool.tooltip = TOOL_HINTS["bpy.ops.mesh.uv_texture_add"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("uv_hard_surface_scaffold.invoke_tool", text="Cube Projection")
            tool.tool_id = "bpy.ops.uv.cube_project"
            tool.tooltip = TOOL_HINTS["bpy.ops.uv.cube_project"]
            shown = True


_CLASSES = (
    UvHardSurfaceScaffoldSettings,
    UV_HARD_SURFACE_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_uv_hard_surface_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.uv_hard_surface_scaffold = PointerProperty(type=UvHardSurfaceScaffoldSettings)


def unregister():
    del bpy.types.Scene.uv_hard_surface_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
