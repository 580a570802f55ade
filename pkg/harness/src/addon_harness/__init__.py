"""Headless harness for generated Blender scaffold panels: a recording bpy
shim, a draw-tree extractor, and spec conformance checks."""

from .bpyshim import BlenderShim, PathProxy, PropDef
from .catalog_regen import EnvironmentMissing, regenerate_catalog
from .conformance import (
    diff_level,
    expected_identifiers,
    read_spec,
    run_conformance,
)
from .loader import (
    LEVELS,
    DrawFailure,
    ImportFailure,
    LoadedAddon,
    RegistrationFailure,
    extract_draw_tree,
    load_and_register,
    unregister_addon,
)
from .recorder import DrawBox, DrawItem, DrawTree, RecordingLayout

__version__ = "0.1.0"
