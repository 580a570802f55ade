"""Command wrapper: conformance checks and catalog regeneration.

Exit codes: 0 conformance passed, 1 conformance failed, 2 environment or I/O
problems (including running regen-catalog outside Blender).
"""

import argparse
import json
import sys
from pathlib import Path

from .catalog_regen import EnvironmentMissing, regenerate_catalog
from .conformance import run_conformance
from .loader import DrawFailure, ImportFailure, RegistrationFailure


def cmd_conformance(args) -> int:
    report = run_conformance(args.addon, args.spec, args.manifest)
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(text)
    return 0 if report["pass"] else 1


def cmd_regen_catalog(args) -> int:
    path = regenerate_catalog(args.out)
    sys.stdout.write(f"wrote {path}\n")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="addon-harness",
        description="Headless conformance checks for generated scaffold panels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conformance", help="compare an add-on's draw tree against its spec")
    p.add_argument("--addon", required=True, help="generated add-on script")
    p.add_argument("--spec", required=True, help="scaffold spec JSON")
    p.add_argument("--manifest", help="emitter manifest JSON (optional cross-check)")
    p.add_argument("--report", help="write the report JSON here as well")
    p.set_defaults(func=cmd_conformance)

    p = sub.add_parser("regen-catalog", help="write a catalog snapshot from a live Blender")
    p.add_argument("--out", required=True, help="snapshot output path")
    p.set_defaults(func=cmd_regen_catalog)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ImportFailure, RegistrationFailure, DrawFailure,
            EnvironmentMissing, OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
