# Generated Blender add-on. Do not edit by hand.

bl_info = {
    "name": "Scaffold: Walk Cycle",
    "description": "Scaffolded panel for: Build a human walk cycle",
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
    "bpy.ops.anim.keyframe_insert": "Key the selected bones at the current frame.\nConcept: A stored pose on a frame that anchors the motion; the walk reads from a few strong key poses.\nShortcut: I\nMenu: Pose > Animation > Insert Keyframe",
    "bpy.ops.pose.copy": "Copy the selected bones' pose.\nConcept: Mirroring a pose to the other side of the body; strides repeat with left and right swapped.\nShortcut: Ctrl+C\nMenu: Pose > Copy Pose",
    "bpy.ops.pose.paste": "Paste the copied pose mirrored onto the other side.\nConcept: Mirroring a pose to the other side of the body; strides repeat with left and right swapped.\nShortcut: Ctrl+Shift+V\nMenu: Pose > Paste Pose Flipped",
    "bpy.ops.pose.breakdown": "Slide an in-between pose between the surrounding keys.\nConcept: A stored pose on a frame that anchors the motion; the walk reads from a few strong key poses.\nShortcut: Shift+E\nMenu: Pose > In-Betweens > Pose Breakdowner",
    "context.scene.frame_end": "Last frame of the walk loop.\nConcept: How many frames each pose change takes; spacing gives the walk its weight and rhythm.\nMenu: Output Properties > Frame Range",
    "bpy.ops.graph.interpolation_type": "Change how the selected keys blend.\nConcept: How values blend between keys; easing changes the feel of a motion.\nShortcut: T\nMenu: Key > Interpolation Mode",
    "bpy.ops.graph.easing_type": "Change easing in and out of the selected keys.\nConcept: How values blend between keys; easing changes the feel of a motion.\nShortcut: Ctrl+E\nMenu: Key > Easing Mode",
    "bpy.ops.screen.animation_play": "Toggle looping playback.\nShortcut: Spacebar\nMenu: Playback > Play Animation",
    "bpy.ops.pose.propagate": "Push the current pose onto later keyframes.\nMenu: Pose > Propagate",
    "bpy.ops.pose.constraint_add": "Constrain the active bone for automatic follow-through.\nConcept: Follow-through movement driven by the main action, like arm swing trailing the torso.\nConcept: A rule that drives one bone from another, useful for automated follow-through.\nShortcut: Ctrl+Shift+C\nMenu: Pose > Constraints > Add Constraint",
    "bpy.ops.graph.clean": "Delete keys that do not change the curve shape.\nMenu: Key > Clean Keyframes",
}


class WalkCycleScaffoldSettings(PropertyGroup):
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


class WALK_CYCLE_SCAFFOLD_OT_invoke_tool(Operator):
    """Run a scaffolded tool; the button tooltip is the composed hint."""

    bl_idname = "walk_cycle_scaffold.invoke_tool"
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


class VIEW3D_PT_walk_cycle_scaffold(Panel):
    bl_idname = "VIEW3D_PT_walk_cycle_scaffold"
    bl_label = "Scaffold: Walk Cycle"
    bl_space_type = "VIEW_3D"
    bl_region_type = "UI"
    bl_category = "Scaffold"

    @classmethod
    def poll(cls, context):
        return context.active_object is not None

    def draw(self, context):
        layout = self.layout
        settings = context.scene.walk_cycle_scaffold
        level = settings.expertise_level

        row = layout.row(align=True)
        row.prop(settings, "expertise_level", expand=True)

        # Stage 1 of 3
        box = layout.box()
        box.label(text="Key Posing")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Insert Keyframe")
            tool.tool_id = "bpy.ops.anim.keyframe_insert"
            tool.tooltip = TOOL_HINTS["bpy.ops.anim.keyframe_insert"]
            shown = True
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Copy Pose")
            tool.tool_id = "bpy.ops.pose.copy"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.copy"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Paste Pose Flipped")
            tool.tool_id = "bpy.ops.pose.paste"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.paste"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Pose Breakdowner")
            tool.tool_id = "bpy.ops.pose.breakdown"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.breakdown"]
            shown = True

        # Stage 2 of 3
        box = layout.box()
        box.label(text="Timing & Interpolation")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            box.prop(context.scene, "frame_end", text="End Frame")
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Set Interpolation")
            tool.tool_id = "bpy.ops.graph.interpolation_type"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.interpolation_type"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Set Easing")
            tool.tool_id = "bpy.ops.graph.easing_type"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.easing_type"]
            shown = True

        # Stage 3 of 3
        box = layout.box()
        box.label(text="Polish & Secondary Motion")
        shown = False
        if level in ("BASIC", "INTERMEDIATE", "ADVANCED"):
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Play Animation")
            tool.tool_id = "bpy.ops.screen.animation_play"
            tool.tooltip = TOOL_HINTS["bpy.ops.screen.animation_play"]
            shown = True
        if level in ("INTERMEDIATE", "ADVANCED"):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Propagate Pose")
            tool.tool_id = "bpy.ops.pose.propagate"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.propagate"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Add Bone Constraint")
            tool.tool_id = "bpy.ops.pose.constraint_add"
            tool.tooltip = TOOL_HINTS["bpy.ops.pose.constraint_add"]
            shown = True
        if level in ("ADVANCED",):
            if shown:
                box.separator()
            tool = box.operator("walk_cycle_scaffold.invoke_tool", text="Clean Keyframes")
            tool.tool_id = "bpy.ops.graph.clean"
            tool.tooltip = TOOL_HINTS["bpy.ops.graph.clean"]
            shown = True


_CLASSES = (
    WalkCycleScaffoldSettings,
    WALK_CYCLE_SCAFFOLD_OT_invoke_tool,
    VIEW3D_PT_walk_cycle_scaffold,
)


def register():
    for cls in _CLASSES:
        bpy.utils.register_class(cls)
    bpy.types.Scene.walk_cycle_scaffold = PointerProperty(type=WalkCycleScaffoldSettings)


def unregister():
    del bpy.types.Scene.walk_cycle_scaffold
    for cls in reversed(_CLASSES):
        bpy.utils.unregister_class(cls)


if __name__ == "__main__":
    register()
