import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from minvar.multisets import MultisetSpec, parse_spec  # noqa: E402

BUILTIN_STRINGS = ["fg-codim", "codim", "gk-fg:d=2", "gk-fg:d=3", "gk:d=2", "gk:d=3", "factorial"]


@pytest.fixture(params=BUILTIN_STRINGS)
def builtin(request) -> MultisetSpec:
    return parse_spec(request.param)


@pytest.fixture
def fib_spec() -> MultisetSpec:
    return MultisetSpec.custom([(1, 1), (2, 1)])
