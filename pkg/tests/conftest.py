import os

import pytest

from diagram.diagram_format import read_diagram
from managers.corpus_manager import CorpusManager

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "diagrams")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, f"{name}.diag")


@pytest.fixture
def corpus():
    return CorpusManager(seed=0)


@pytest.fixture
def unknot():
    return read_diagram(data_path("unknot"))


@pytest.fixture
def two_bridge():
    return read_diagram(data_path("two_bridge"))


@pytest.fixture
def section7_h():
    return read_diagram(data_path("section7_H"))


@pytest.fixture
def section7_h_prime():
    return read_diagram(data_path("section7_H_prime"))


@pytest.fixture
def netext0ce():
    return read_diagram(data_path("netext0ce"))


@pytest.fixture
def theta():
    return read_diagram(data_path("theta"))
