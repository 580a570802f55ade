# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Sculpt Blocking",
    "description": "Scaffolded panel for: Sculpt a simple base mesh",
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
}


class SculptBlockScaffoldSettings(PropertyGroup):
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


class SCULPT_BLOCK_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "sculpt_block_scaffold.invoke_tool"
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


class VIEW3D_PT_sculpt_block_scaffold(Panel):
    bl_idname = "VIEW3D_PT_sculpt_block_scaffold"
    bl_label = "Scaffold: Sculpt Blocking"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.sculpt_block_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 1
        box = layout.box()
        box.label(text="Blocking")


_CLASSES = (
    SculptBlockScaffoldSettings,
    SCULPT_BLOCK_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_sculpt_block_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.sculpt_block_scaffold = PointerProperty(type=SculptBlockScaffoldSettings)


def unregister():
    del bpy.types.Scene.sculpt_block_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
