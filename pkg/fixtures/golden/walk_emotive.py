# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Emotive Walk",
    "description": "Scaffolded panel for: Build an emotive walk cycle with personality",
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
    "bpy.ops.anim.keyframe_insert": "Key the selected bones at the current frame.\nShortcut: I\nMenu: Pose > Animation > Insert Keyframe",
    "bpy.ops.pose.breakdown": "Slide an in-between pose between the surrounding keys.\nConcept: A key pose pushed to express emotion, read mostly from the spine and head.\nShortcut: Shift+E\nMenu: Pose > In-Betweens > Pose Breakdowner",
    "context.scene.frame_current": "The frame being edited.\nMenu: Timeline > Playhead",
    "bpy.ops.graph.easing_type": "Change easing in and out of the selected keys.\nShortcut: Ctrl+E\nMenu: Key > Easing Mode",
    "bpy.ops.nla.bake": "Bake the layered animation into keyframes.\nConcept: Separate animation passes stacked on the base walk, like a head bob added over the stride.\nMenu: Object > Animation > Bake Action",
}


class WalkEmotiveScaffoldSettings(PropertyGroup):
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


class WALK_EMOTIVE_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "walk_emotive_scaffold.invoke_tool"
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


class VIEW3D_PT_walk_emotive_scaffold(Panel):
    bl_idname = "VIEW3D_PT_walk_emotive_scaffold"
    bl_label = "Scaffold: Emotive Walk"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.walk_emotive_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 2
        box = layout.box()
        box.label(text="Reference & Attitude Posing")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("walk_emotive_scaffold.invoke_tool", text="Insert Keyframe")
            tool.tool_id = "bpy.ops.anim.keyframe_insert"
            tool.tooltip = TOOL_HINTS["bpy.ops.anim.keyframe_insert"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_emotive_scaffold.invoke_tool", text="Pose Breakdowner")
            tool.tool_id = "bpy.ops.pose.breakdown"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.breakdown"]
            shown = True

        # Stage 2 of 2
        box = layout.box()
        box.label(text="Timing & Layered Motion")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            box.prop(context.scene, "frame_current", text="Current Frame")
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_emotive_scaffold.invoke_tool", text="Set Easing")
            tool.tool_id = "bpy.ops.graph.easing_type"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.easing_type"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_emotive_scaffold.invoke_tool", text="Bake Action")
            tool.tool_id = "bpy.ops.nla.bake"
            tool.tooltip = TOOL_HINTS["bpy.ops.nla.bake"]
            shown = True


_CLASSES = (
    WalkEmotiveScaffoldSettings,
    WALK_EMOTIVE_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_walk_emotive_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.walk_emotive_scaffold = PointerProperty(type=WalkEmotiveScaffoldSettings)


def unregister():
    del bpy.types.Scene.walk_emotive_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
