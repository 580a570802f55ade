"""Release-validation script for a real headless Blender.

Usage:

    blender --background --factory-startup --python harness/scripts/blender_smoke.py \
        -- --addon fixtures/golden/task1_uv_unwrapping.py --catalog-out /tmp/snapshot.json

Registers the given add-on inside the live Blender, unregisters it, and
regenerates a catalog snapshot. Prints SMOKE-OK on success so a wrapper can
grep for it.
"""

import argparse
import runpy
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from addon_harness.catalog_regen import regenerate_catalog  # noqa: E402


def parse_args():
    if "--" in sys.argv:
        argv = sys.argv[sys.argv.index("--") + 1:]
    else:
        argv = []
    parser = argparse.ArgumentParser()
    parser.add_argument("--addon", required=True)
    parser.add_argument("--catalog-out", required=True)
    return parser.parse_args(argv)


def main() -> int:
    args = parse_args()
    namespace = runpy.run_path(args.addon)
    namespace["register"]()
    namespace["unregister"]()
    print(f"SMOKE-OK register/unregister {Path(args.addon).name}")

    out = regenerate_catalog(args.catalog_out)
    print(f"SMOKE-OK catalog {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
