"""Snapshot of the target platform's callable surface.

A catalog is loaded from a JSON array of entry objects and queried by exact,
case-sensitive identifier match, which keeps spec validation hermetic: no
live Blender is consulted. The harness package can regenerate a snapshot
from a real Blender when one is available.
"""

import json
from dataclasses import dataclass, field

from .core import ToolKind, canonical_json, is_tool_identifier


class MalformedCatalog(ValueError):
    """Raised when a snapshot document has the wrong shape or bad entries."""


class DuplicateIdentifier(ValueError):
    """Raised when a snapshot lists the same identifier twice."""


@dataclass(frozen=True)
class CatalogEntry:
    identifier: str
    kind: ToolKind
    description: str = ""
    modes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))


@dataclass(frozen=True)
class ApiCatalog:
    """Immutable identifier→entry map plus snapshot provenance (e.g. "blender-3.6")."""

    entries: dict[str, CatalogEntry] = field(default_factory=dict)
    source: str = "unspecified"

    def resolve(self, identifier: str) -> CatalogEntry | None:
        """Exact-match lookup; absence is None, never an error."""
        return self.entries.get(identifier)

    def __len__(self) -> int:
        return len(self.entries)


def resolve(catalog: ApiCatalog, identifier: str) -> CatalogEntry | None:
    return catalog.resolve(identifier)


def _entry_from_dict(data, index: int) -> CatalogEntry:
    if not isinstance(data, dict):
        raise MalformedCatalog(f"entry[{index}]: expected an object")
    extra = set(data) - {"identifier", "kind", "description", "modes"}
    if extra:
        raise MalformedCatalog(f"entry[{index}]: unknown keys: {', '.join(sorted(extra))}")
    identifier = data.get("identifier")
    if not isinstance(identifier, str) or not is_tool_identifier(identifier):
        raise MalformedCatalog(f"entry[{index}]: bad identifier {identifier!r}")
    kind_name = data.get("kind")
    kind = next((k for k in ToolKind if k.value == kind_name), None)
    if kind is None:
        raise MalformedCatalog(f"entry[{index}] ({identifier}): bad kind {kind_name!r}")
    description = data.get("description", "")
    if not isinstance(description, str):
        raise MalformedCatalog(f"entry[{index}] ({identifier}): description must be a string")
    modes = data.get("modes", [])
    if not isinstance(modes, list) or not all(isinstance(m, str) for m in modes):
        raise MalformedCatalog(f"entry[{index}] ({identifier}): modes must be a list of strings")
    return CatalogEntry(identifier=identifier, kind=kind, description=description, modes=tuple(modes))


def load_catalog(document: str, source: str = "unspecified") -> ApiCatalog:
    """Parse the snapshot format: a JSON array of entry objects.

    The file format carries no provenance field, so ``source`` comes from the
    caller. Raises :class:`MalformedCatalog` for syntax or shape problems and
    :class:`DuplicateIdentifier` when an identifier repeats.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise MalformedCatalog(f"snapshot is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise MalformedCatalog("snapshot root must be a JSON array")
    entries: dict[str, CatalogEntry] = {}
    for index, item in enumerate(data):
        entry = _entry_from_dict(item, index)
        if entry.identifier in entries:
            raise DuplicateIdentifier(f"identifier {entry.identifier!r} listed twice")
        entries[entry.identifier] = entry
    return ApiCatalog(entries=entries, source=source)


def catalog_to_json(catalog: ApiCatalog) -> str:
    """Re-emit the snapshot form, entries sorted by identifier."""
    items = []
    for identifier in sorted(catalog.entries):
        entry = catalog.entries[identifier]
        item: dict = {"identifier": entry.identifier, "kind": entry.kind.value}
        if entry.description:
            item["description"] = entry.description
        if entry.modes:
            item["modes"] = list(entry.modes)
        items.append(item)
    return canonical_json(items)
