"""Pytest fixtures over the shipped fixture corpus."""

from pathlib import Path

import pytest

from scaffoldc import ApiCatalog, ScaffoldSpec, load_catalog, spec_from_json

from helpers import FIXTURES, SPEC_NAMES


@pytest.fixture(scope="session")
def catalog_path() -> Path:
    return FIXTURES / "catalog" / "blender_36.json"


@pytest.fixture(scope="session")
def catalog(catalog_path) -> ApiCatalog:
    return load_catalog(catalog_path.read_text(encoding="utf-8"), source="blender-3.6")


@pytest.fixture(scope="session")
def task1_path() -> Path:
    return FIXTURES / "specs" / "task1_uv_unwrapping.json"


@pytest.fixture(scope="session")
def task1_spec(task1_path) -> ScaffoldSpec:
    return spec_from_json(task1_path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def all_spec_paths() -> list[Path]:
    return [FIXTURES / "specs" / f"{name}.json" for name in SPEC_NAMES]
