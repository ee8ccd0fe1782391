import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def data_dir() -> pathlib.Path:
    return DATA


@pytest.fixture
def golden_dir() -> pathlib.Path:
    return GOLDEN
