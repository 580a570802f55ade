"""Semantic validation of scaffold specs.

The rule set is closed; every diagnostic carries one of these stable codes:

====== ======== =====================================================
code   severity meaning
====== ======== =====================================================
SC001  Error    duplicate stage ordinal
SC002  Error    tool identifier appears in more than one stage
SC003  Error    tool has an empty visibility set
SC004  Warning  visibility is not the cumulative default for the
                tool's expertise level
SC005  Error*   tool identifier not found in the API catalog
                (*downgraded to Warning when strict is off)
SC006  Warning  tool kind disagrees with the catalog entry's kind
SC007  Warning  concept lists no related tools
SC008  Info     tool has no native hint (shortcut / menu path)
SC009  Error    concept references a tool id absent from the spec
SC010  Warning  stage contains zero tools
====== ======== =====================================================

Problems are returned as values, never raised; the list is deterministically
ordered by location, then code, then message.
"""

import enum
from dataclasses import dataclass

from .catalog import ApiCatalog
from .core import ScaffoldSpec, default_visibility


class Severity(enum.Enum):
    ERROR = "Error"
    WARNING = "Warning"
    INFO = "Info"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    location: str

    def to_dict(self) -> dict:
        return {
            "severity": self.severity.value,
            "code": self.code,
            "message": self.message,
            "location": self.location,
        }


#: The documented closed set of rule codes.
RULE_CODES: tuple[str, ...] = tuple(f"SC{n:03d}" for n in range(1, 11))


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity is Severity.ERROR for d in diagnostics)


def validate(
    spec: ScaffoldSpec,
    catalog: ApiCatalog | None = None,
    *,
    strict: bool = True,
) -> list[Diagnostic]:
    """Run every rule against ``spec`` and return all findings.

    ``catalog`` enables the identifier rules SC005/SC006; without one, only
    the catalog-free rules run (the emitter uses that mode as its gate).
    ``strict`` controls whether SC005 is an Error or a Warning.
    """
    out: list[Diagnostic] = []

    def report(severity: Severity, code: str, message: str, location: str):
        out.append(Diagnostic(severity, code, message, location))

    seen_ordinals: dict[int, int] = {}
    seen_tools: dict[str, str] = {}
    tool_ids = spec.tool_ids()

    for i, stage in enumerate(spec.stages):
        loc = f"stage[{i}]"
        if stage.ordinal in seen_ordinals:
            report(
                Severity.ERROR,
                "SC001",
                f"stage ordinal {stage.ordinal} already used by stage[{seen_ordinals[stage.ordinal]}]",
                loc,
            )
        else:
            seen_ordinals[stage.ordinal] = i

        if not stage.tools:
            report(Severity.WARNING, "SC010", f"stage {stage.name!r} has no tools", loc)

        for j, tool in enumerate(stage.tools):
            tloc = f"{loc}.tools[{j}]"
            if tool.identifier in seen_tools:
                report(
                    Severity.ERROR,
                    "SC002",
                    f"tool {tool.identifier!r} already appears in {seen_tools[tool.identifier]}",
                    tloc,
                )
            else:
                seen_tools[tool.identifier] = tloc

            if not tool.visibility:
                report(
                    Severity.ERROR,
                    "SC003",
                    f"tool {tool.identifier!r} has an empty visibility set",
                    tloc,
                )
            elif tool.visibility != default_visibility(tool.expertise):
                have = ", ".join(lvl.canonical_name for lvl in sorted(tool.visibility))
                want = ", ".join(
                    lvl.canonical_name for lvl in sorted(default_visibility(tool.expertise))
                )
                report(
                    Severity.WARNING,
                    "SC004",
                    f"tool {tool.identifier!r} visibility {{{have}}} is not the "
                    f"cumulative default {{{want}}} for expertise {tool.expertise.canonical_name}",
                    tloc,
                )

            if catalog is not None:
                entry = catalog.resolve(tool.identifier)
                if entry is None:
                    severity = Severity.ERROR if strict else Severity.WARNING
                    report(
                        severity,
                        "SC005",
                        f"identifier {tool.identifier!r} not found in catalog {catalog.source!r}",
                        tloc,
                    )
                elif entry.kind is not tool.kind:
                    report(
                        Severity.WARNING,
                        "SC006",
                        f"tool {tool.identifier!r} declared {tool.kind.value} but catalog "
                        f"says {entry.kind.value}",
                        tloc,
                    )

            if tool.native_hint is None:
                report(
                    Severity.INFO,
                    "SC008",
                    f"tool {tool.identifier!r} has no native hint",
                    tloc,
                )

        for k, concept in enumerate(stage.concepts):
            cloc = f"{loc}.concepts[{k}]"
            if not concept.related_tool_ids:
                report(
                    Severity.WARNING,
                    "SC007",
                    f"concept {concept.name!r} lists no related tools",
                    cloc,
                )
            for related in concept.related_tool_ids:
                if related not in tool_ids:
                    report(
                        Severity.ERROR,
                        "SC009",
                        f"concept {concept.name!r} references unknown tool {related!r}",
                        cloc,
                    )

    out.sort(key=lambda d: (d.location, d.code, d.message))
    return out
