from pathlib import Path
from typing import Callable

import pytest

from src.providers.instance.file import parse_instance
from src.services.hypergraph import Hypergraph
from tests.factory import instances


# ---- Named instances ----
@pytest.fixture()
def worked() -> Hypergraph:
    return parse_instance(instances.WORKED)


@pytest.fixture()
def path_q2() -> Hypergraph:
    return parse_instance(instances.PATH_Q2)


@pytest.fixture()
def triple_q4() -> Hypergraph:
    return parse_instance(instances.TRIPLE_Q4)


@pytest.fixture()
def dependent_triple() -> Hypergraph:
    return parse_instance(instances.DEPENDENT_TRIPLE)


@pytest.fixture()
def cycle_of_singletons() -> Hypergraph:
    return parse_instance(instances.CYCLE_OF_SINGLETONS)


@pytest.fixture()
def bridged() -> Hypergraph:
    return parse_instance(instances.BRIDGED)


@pytest.fixture()
def two_disjoint() -> Hypergraph:
    return parse_instance(instances.TWO_DISJOINT)


# ---- Instance files ----
@pytest.fixture()
def instance_file(tmp_path) -> Callable[[str], Path]:
    def _factory(text: str, name: str = 'instance.hgr') -> Path:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return path

    return _factory
