import pytest

from fixture_corpus import SPEC_NAMES


@pytest.fixture(params=SPEC_NAMES)
def fixture_name(request) -> str:
    return request.param
