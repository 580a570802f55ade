"""Command-line front end.

Exit codes follow one contract everywhere: 0 clean, 1 semantic validation
errors, 2 environment / I-O / transport problems (argparse usage errors also
exit 2).
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .catalog import ApiCatalog, DuplicateIdentifier, MalformedCatalog, load_catalog
from .core import (
    InvalidSpec,
    UnknownLevel,
    canonical_json,
    panel_from_dict,
    spec_from_json,
    spec_to_json,
)
from .diagnostics import Diagnostic, Severity, validate
from .emitter import EmptySpec, UnvalidatedSpec, emit, emit_manifest
from .llm import (
    API_KEY_ENV,
    EmptyResponse,
    FixtureMiss,
    FixtureTransport,
    HttpTransport,
    LlmTranscript,
    TransportError,
    prompt_fingerprint,
)
from .parsing import MalformedBlock, NoStagesFound
from .pipeline import (
    PipelineError,
    ValidationFailed,
    analyze_task,
    run_pipeline,
    select_tools,
)
from .prompts import MissingPlaceholder, UnknownPlaceholder


class CliError(Exception):
    """Configuration or environment problem; maps to exit code 2."""


_ENVIRONMENT_ERRORS = (
    CliError,
    OSError,
    InvalidSpec,
    MalformedCatalog,
    DuplicateIdentifier,
    TransportError,
    FixtureMiss,
    EmptyResponse,
    NoStagesFound,
    MalformedBlock,
    UnknownLevel,
    MissingPlaceholder,
    UnknownPlaceholder,
    PipelineError,
)


def _make_transport(args):
    if bool(args.fixtures) == bool(args.base_url):
        raise CliError(
            "exactly one of --fixtures DIR or --base-url URL is required for this command"
        )
    if args.fixtures:
        fixture_dir = Path(args.fixtures)
        if not fixture_dir.is_dir():
            raise CliError(f"fixture directory not found: {fixture_dir}")
        return FixtureTransport(directory=fixture_dir, model_tag=args.model)
    api_key = os.environ.get(API_KEY_ENV, "")
    if not api_key:
        raise CliError(f"live mode needs the {API_KEY_ENV} environment variable")
    return HttpTransport(base_url=args.base_url, model_tag=args.model, api_key=api_key)


def _load_catalog(args) -> ApiCatalog:
    if not args.catalog:
        raise CliError("--catalog PATH is required for this command")
    path = Path(args.catalog)
    return load_catalog(path.read_text(encoding="utf-8"), source=path.stem)


def _load_spec(path_text: str):
    return spec_from_json(Path(path_text).read_text(encoding="utf-8"))


def _counts(diagnostics: list[Diagnostic]) -> tuple[int, int, int]:
    errors = sum(1 for d in diagnostics if d.severity is Severity.ERROR)
    warnings = sum(1 for d in diagnostics if d.severity is Severity.WARNING)
    infos = sum(1 for d in diagnostics if d.severity is Severity.INFO)
    return errors, warnings, infos


def _print_report(diagnostics: list[Diagnostic], as_json: bool) -> None:
    errors, warnings, infos = _counts(diagnostics)
    if as_json:
        payload = {
            "diagnostics": [d.to_dict() for d in diagnostics],
            "errors": errors,
            "warnings": warnings,
            "infos": infos,
        }
        sys.stdout.write(canonical_json(payload))
        return
    for d in diagnostics:
        sys.stdout.write(f"{d.severity.value:<8} {d.code}  {d.location:<26} {d.message}\n")
    sys.stdout.write(f"{errors} errors, {warnings} warnings, {infos} infos\n")


def _transcript_payload(transcript: LlmTranscript) -> dict:
    # Audit form; deliberately timestamp-free so re-runs are byte-identical.
    return {
        "template-id": transcript.rendered.template_id.value,
        "prompt-hash": prompt_fingerprint(transcript.rendered.text),
        "bindings": {k: transcript.rendered.bindings[k]
                     for k in sorted(transcript.rendered.bindings)},
        "prompt": transcript.rendered.text,
        "response": transcript.response,
        "model-tag": transcript.model_tag,
    }


def cmd_analyze(args) -> int:
    if not args.task.strip():
        raise CliError("task description is empty")
    transport = _make_transport(args)
    stages, _ = analyze_task(args.task, transport)
    payload = [{"name": s.name, "description": s.description} for s in stages]
    sys.stdout.write(canonical_json(payload))
    return 0


def cmd_map_tools(args) -> int:
    transport = _make_transport(args)
    raw = json.loads(Path(args.stages).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise CliError(f"{args.stages}: expected a JSON array of stages")
    from .parsing import StageOutline

    stages = []
    for item in raw:
        if not isinstance(item, dict) or "name" not in item or "description" not in item:
            raise CliError(f"{args.stages}: each stage needs 'name' and 'description'")
        stages.append(StageOutline(name=item["name"], description=item["description"]))
    suggestions, _ = select_tools(stages, transport)
    payload = [
        {
            "stage": outline.name,
            "suggestions": [
                {
                    "identifier": s.identifier,
                    "kind": s.kind.value,
                    "rationale": s.rationale,
                    "context": s.context,
                    "expertise-raw": s.expertise_raw,
                    "expertise": s.expertise.canonical_name,
                }
                for s in suggestions[outline.name]
            ],
        }
        for outline in stages
    ]
    sys.stdout.write(canonical_json(payload))
    return 0


def cmd_validate(args) -> int:
    catalog = _load_catalog(args)
    spec = _load_spec(args.spec)
    diagnostics = validate(spec, catalog, strict=args.strict)
    _print_report(diagnostics, args.json)
    errors, _, _ = _counts(diagnostics)
    return 1 if errors else 0


def cmd_emit(args) -> int:
    catalog = _load_catalog(args)
    spec = _load_spec(args.spec)
    diagnostics = validate(spec, catalog, strict=args.strict)
    errors, warnings, _ = _counts(diagnostics)
    if errors:
        _print_report(diagnostics, args.json)
        return 1
    addon = emit(spec)
    out = Path(args.out)
    out.write_text(addon.source, encoding="utf-8", newline="\n")
    written = [str(out)]
    if args.manifest:
        manifest_path = out.parent / (out.stem + ".manifest.json")
        manifest_path.write_text(emit_manifest(addon), encoding="utf-8", newline="\n")
        written.append(str(manifest_path))
    m = addon.manifest
    sys.stdout.write(
        f"wrote {', '.join(written)} "
        f"({m.stage_count} stages, {m.tool_count} tools, {warnings} warnings)\n"
    )
    return 0


def cmd_pipeline(args) -> int:
    if not args.task.strip():
        raise CliError("task description is empty")
    catalog = _load_catalog(args)
    transport = _make_transport(args)
    panel_data = json.loads(Path(args.panel).read_text(encoding="utf-8"))
    panel = panel_from_dict(panel_data, path=args.panel)

    try:
        result = run_pipeline(
            args.task, panel, catalog, transport, strict=args.strict
        )
    except ValidationFailed as exc:
        sys.stderr.write("pipeline step 'validate' failed\n")
        _print_report(exc.diagnostics, args.json)
        return 1

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec_path = out_dir / "spec.json"
    addon_path = out_dir / "addon.py"
    manifest_path = out_dir / "addon.manifest.json"
    spec_path.write_text(spec_to_json(result.spec), encoding="utf-8", newline="\n")
    addon_path.write_text(result.addon.source, encoding="utf-8", newline="\n")
    manifest_path.write_text(emit_manifest(result.addon), encoding="utf-8", newline="\n")

    transcripts_dir = out_dir / "transcripts"
    transcripts_dir.mkdir(exist_ok=True)
    for index, transcript in enumerate(result.transcripts):
        key = prompt_fingerprint(transcript.rendered.text)
        path = transcripts_dir / f"{index:02d}_{key}.json"
        path.write_text(canonical_json(_transcript_payload(transcript)), encoding="utf-8", newline="\n")

    errors, warnings, infos = _counts(result.diagnostics)
    sys.stdout.write(
        f"wrote {spec_path}, {addon_path}, {manifest_path} "
        f"({result.addon.manifest.stage_count} stages, "
        f"{result.addon.manifest.tool_count} tools, "
        f"{errors} errors, {warnings} warnings, {infos} infos)\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scaffoldc",
        description="Compile declarative task-workflow specs into Blender add-on panels.",
    )
    parser.add_argument("--catalog", metavar="PATH", help="API catalog snapshot JSON")
    parser.add_argument("--fixtures", metavar="DIR", help="recorded-response directory (replay mode)")
    parser.add_argument("--base-url", metavar="URL", help="live chat-completion endpoint")
    parser.add_argument("--model", metavar="TAG", default="gpt-4o", help="model tag (default: gpt-4o)")
    parser.add_argument(
        "--strict",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="treat unknown identifiers (SC005) as errors (default) or warnings",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable reports")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decompose a task into workflow stages")
    p.add_argument("task", help="task description, e.g. 'UV unwrap a cube'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("map-tools", help="suggest tools for each stage in a stages file")
    p.add_argument("stages", help="stage list JSON (as printed by analyze)")
    p.set_defaults(func=cmd_map_tools)

    p = sub.add_parser("validate", help="run all diagnostic rules against a spec")
    p.add_argument("spec", help="scaffold spec JSON")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("emit", help="generate the add-on script from a spec")
    p.add_argument("spec", help="scaffold spec JSON")
    p.add_argument("out", help="output path for the add-on script")
    p.add_argument("--manifest", action="store_true", help="also write the manifest JSON")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("pipeline", help="task description to spec and add-on, end to end")
    p.add_argument("task", help="task description")
    p.add_argument("--panel", required=True, metavar="PATH", help="panel config JSON")
    p.add_argument("--out", required=True, metavar="DIR", help="output directory")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnvalidatedSpec as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except EmptySpec as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except _ENVIRONMENT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"error: invalid JSON: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
