"""A recording fake of the Blender scripting surface.

Each :class:`BlenderShim` builds a fresh ``bpy`` module graph (``bpy``,
``bpy.props``, ``bpy.types``, ``bpy.utils``, ``bpy.ops``) so add-ons can be
imported and registered headlessly. Nothing is rendered: property definitions
are recorded as markers and attribute chains off ``context`` are path proxies,
which is all the draw recorder needs.
"""

import sys
import types
from contextlib import contextmanager


class PropDef:
    """Marker returned by the bpy.props factories."""

    def __init__(self, prop_kind: str, options: dict):
        self.prop_kind = prop_kind
        self.options = options

    @property
    def default(self):
        if "default" in self.options:
            return self.options["default"]
        if self.prop_kind == "ENUM":
            items = self.options.get("items") or ()
            return items[0][0] if items else ""
        return {"STRING": "", "INT": 0, "FLOAT": 0.0, "BOOL": False}.get(self.prop_kind)


def _prop_factory(prop_kind: str):
    def factory(**options):
        return PropDef(prop_kind, options)

    return factory


class PathProxy:
    """Stands in for context attribute chains; remembers its dotted path."""

    def __init__(self, path: str):
        object.__setattr__(self, "_shim_path", path)

    def __getattr__(self, name: str):
        return PathProxy(f"{self._shim_path}.{name}")

    def __repr__(self):
        return f"<PathProxy {self._shim_path}>"


def instantiate_property_group(pg_class):
    """Build a plain instance carrying each annotated property's default."""
    instance = pg_class()
    for name, value in getattr(pg_class, "__annotations__", {}).items():
        if isinstance(value, PropDef):
            setattr(instance, name, value.default)
    return instance


class BlenderShim:
    """One isolated fake Blender session."""

    def __init__(self):
        self.registered: list[type] = []

        bpy = types.ModuleType("bpy")
        bpy_props = types.ModuleType("bpy.props")
        bpy_types = types.ModuleType("bpy.types")
        bpy_utils = types.ModuleType("bpy.utils")
        bpy_ops = types.ModuleType("bpy.ops")

        for kind, name in [
            ("ENUM", "EnumProperty"),
            ("POINTER", "PointerProperty"),
            ("STRING", "StringProperty"),
            ("INT", "IntProperty"),
            ("FLOAT", "FloatProperty"),
            ("BOOL", "BoolProperty"),
        ]:
            setattr(bpy_props, name, _prop_factory(kind))

        shim = self

        class PropertyGroup:
            pass

        class Panel:
            pass

        class Operator:
            pass

        class Scene:
            _shim_path = "context.scene"

            def __getattr__(self, name):
                prop_def = getattr(type(self), name, None)
                if isinstance(prop_def, PropDef) and prop_def.prop_kind == "POINTER":
                    instance = instantiate_property_group(prop_def.options["type"])
                    self.__dict__[name] = instance
                    return instance
                raise AttributeError(name)

        class Context:
            def __init__(self):
                self.scene = Scene()
                self.active_object = object()

            def __getattr__(self, name):
                return PathProxy(f"context.{name}")

        bpy_types.PropertyGroup = PropertyGroup
        bpy_types.Panel = Panel
        bpy_types.Operator = Operator
        bpy_types.Scene = Scene

        def register_class(cls):
            if cls in shim.registered:
                raise ValueError(f"class {cls.__name__} registered twice")
            shim.registered.append(cls)

        def unregister_class(cls):
            if cls not in shim.registered:
                raise ValueError(f"class {cls.__name__} is not registered")
            shim.registered.remove(cls)

        bpy_utils.register_class = register_class
        bpy_utils.unregister_class = unregister_class

        bpy.props = bpy_props
        bpy.types = bpy_types
        bpy.utils = bpy_utils
        bpy.ops = PathProxy("bpy.ops")
        bpy.context = Context()

        self.bpy = bpy
        self.modules = {
            "bpy": bpy,
            "bpy.props": bpy_props,
            "bpy.types": bpy_types,
            "bpy.utils": bpy_utils,
        }

    @contextmanager
    def installed(self):
        """Temporarily place the shim modules into sys.modules for an import."""
        saved = {name: sys.modules.get(name) for name in self.modules}
        sys.modules.update(self.modules)
        try:
            yield
        finally:
            for name, module in saved.items():
                if module is None:
                    sys.modules.pop(name, None)
                else:
                    sys.modules[name] = module

    # inspection helpers ------------------------------------------------------

    def scene_pointers(self) -> dict[str, type]:
        """Pointer properties the add-on attached to the scene."""
        out = {}
        for name, value in vars(self.bpy.types.Scene).items():
            if isinstance(value, PropDef) and value.prop_kind == "POINTER":
                out[name] = value.options["type"]
        return out

    def panels(self) -> list[type]:
        return [cls for cls in self.registered
                if issubclass(cls, self.bpy.types.Panel)]

    def is_clean(self) -> bool:
        """True when nothing is registered and the scene carries no pointers."""
        return not self.registered and not self.scene_pointers()
