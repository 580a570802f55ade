"""Load emitted add-ons against the shim, register them, and record draw trees."""

import traceback
import types
from dataclasses import dataclass, field
from pathlib import Path

from .bpyshim import BlenderShim, instantiate_property_group
from .recorder import DrawTree, RecordingLayout

LEVELS = ("BASIC", "INTERMEDIATE", "ADVANCED")


class ImportFailure(RuntimeError):
    """The add-on source failed to import; carries the traceback text."""


class RegistrationFailure(RuntimeError):
    """register()/unregister() missing or raising; carries the traceback text."""


class DrawFailure(RuntimeError):
    """The panel's draw() raised; carries the traceback text."""


@dataclass
class LoadedAddon:
    path: Path
    module: types.ModuleType
    shim: BlenderShim
    registered_classes: list[str] = field(default_factory=list)
    scene_pointers: dict[str, str] = field(default_factory=dict)

    def report(self) -> dict:
        return {
            "addon": str(self.path),
            "registered": list(self.registered_classes),
            "scene-pointers": dict(self.scene_pointers),
        }


def load_and_register(addon_source_path) -> LoadedAddon:
    """Import the add-on with the shim active and run its register().

    Raises :class:`ImportFailure` when the source does not execute and
    :class:`RegistrationFailure` when the register/unregister contract is
    broken.
    """
    path = Path(addon_source_path)
    shim = BlenderShim()
    module = types.ModuleType(f"scaffold_addon_{path.stem}")
    module.__file__ = str(path)

    try:
        code = compile(path.read_text(encoding="utf-8"), str(path), "exec")
        with shim.installed():
            exec(code, module.__dict__)
    except Exception:
        raise ImportFailure(traceback.format_exc()) from None

    register = getattr(module, "register", None)
    unregister = getattr(module, "unregister", None)
    if not callable(register):
        raise RegistrationFailure("add-on defines no register() function")
    if not callable(unregister):
        raise RegistrationFailure("add-on defines no unregister() function")

    try:
        register()
    except Exception:
        raise RegistrationFailure(traceback.format_exc()) from None

    return LoadedAddon(
        path=path,
        module=module,
        shim=shim,
        registered_classes=[cls.__name__ for cls in shim.registered],
        scene_pointers={
            name: pg.__name__ for name, pg in shim.scene_pointers().items()
        },
    )


def unregister_addon(addon: LoadedAddon) -> None:
    """Run unregister() and verify the shim is back to a clean slate."""
    try:
        addon.module.unregister()
    except Exception:
        raise RegistrationFailure(traceback.format_exc()) from None
    if not addon.shim.is_clean():
        leftovers = [cls.__name__ for cls in addon.shim.registered]
        pointers = sorted(addon.shim.scene_pointers())
        raise RegistrationFailure(
            f"unregister() left state behind: classes={leftovers}, scene pointers={pointers}"
        )


def extract_draw_tree(addon: LoadedAddon, level: str) -> DrawTree:
    """Draw the registered panel at one complexity level and record the tree."""
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")

    pointers = addon.shim.scene_pointers()
    if len(pointers) != 1:
        raise DrawFailure(
            f"expected exactly one scene pointer, found {sorted(pointers)}"
        )
    (pointer_name,) = pointers
    panels = addon.shim.panels()
    if len(panels) != 1:
        raise DrawFailure(
            f"expected exactly one registered panel, found "
            f"{[cls.__name__ for cls in panels]}"
        )
    (panel_class,) = panels

    context = addon.shim.bpy.context
    settings = getattr(context.scene, pointer_name)
    settings.expertise_level = level

    poll = getattr(panel_class, "poll", None)
    if callable(poll) and not poll(context):
        raise DrawFailure("panel poll() rejected the shim context")

    layout = RecordingLayout()
    panel = panel_class()
    panel.layout = layout
    try:
        panel.draw(context)
    except Exception:
        raise DrawFailure(traceback.format_exc()) from None

    return DrawTree(level=level, boxes=layout.boxes)


def fresh_property_group(addon: LoadedAddon, pointer_name: str):
    """A throwaway settings instance (used by tests to inspect defaults)."""
    pg_class = addon.shim.scene_pointers()[pointer_name]
    return instantiate_property_group(pg_class)
