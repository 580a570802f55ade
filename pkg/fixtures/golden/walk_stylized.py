# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Stylized Walk",
    "description": "Scaffolded panel for: Build a stylized, abstract walk cycle",
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
    "bpy.ops.transform.resize": "Scale the selected bones.\nShortcut: S\nMenu: Pose > Transform > Scale",
    "bpy.ops.pose.push": "Push the pose further from the neighboring keys.\nConcept: Deliberately overshooting real proportions or motion so the style reads clearly.\nShortcut: Ctrl+E\nMenu: Pose > In-Betweens > Push Pose",
    "bpy.ops.graph.interpolation_type": "Change how the selected keys blend.\nConcept: Holding poses with no in-between blending, a stop-motion feel used in stylized animation.\nShortcut: T\nMenu: Key > Interpolation Mode",
    "bpy.ops.graph.easing_type": "Change easing in and out of the selected keys.\nShortcut: Ctrl+E\nMenu: Key > Easing Mode",
}


class WalkStylizedScaffoldSettings(PropertyGroup):
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


class WALK_STYLIZED_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "walk_stylized_scaffold.invoke_tool"
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


class VIEW3D_PT_walk_stylized_scaffold(Panel):
    bl_idname = "VIEW3D_PT_walk_stylized_scaffold"
    bl_label = "Scaffold: Stylized Walk"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.walk_stylized_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 2
        box = layout.box()
        box.label(text="Exaggerated Form & Motion")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("walk_stylized_scaffold.invoke_tool", text="Scale Pose")
            tool.tool_id = "bpy.ops.transform.resize"
            tool.tooltip = TOOL_HINTS["bpy.ops.transform.resize"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_stylized_scaffold.invoke_tool", text="Push Pose")
            tool.tool_id = "bpy.ops.pose.push"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.push"]
            shown = True

        # Stage 2 of 2
        box = layout.box()
        box.label(text="Rhythm & Interpolation Tricks")
        shown = False
        if level in ("INTERMEDIATE", "ADVANCED"):
            tool = box.operator("walk_stylized_scaffold.invoke_tool", text="Set Interpolation")
            tool.tool_id = "bpy.ops.graph.interpolation_type"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.interpolation_type"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_stylized_scaffold.invoke_tool", text="Set Easing")
            tool.tool_id = "bpy.ops.graph.easing_type"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.easing_type"]
            shown = True


_CLASSES = (
    WalkStylizedScaffoldSettings,
    WALK_STYLIZED_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_walk_stylized_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.walk_stylized_scaffold = PointerProperty(type=WalkStylizedScaffoldSettings)


def unregister():
    del bpy.types.Scene.walk_stylized_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
