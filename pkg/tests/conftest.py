from __future__ import annotations

from pathlib import Path

import pytest

from urprior.cli import load_complex, load_system
from urprior.complexes import SimplicialComplex
from urprior.credence import AgentSystem

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


def _system(name: str) -> AgentSystem:
    return load_system(str(DATA / name))


def _complex(name: str) -> SimplicialComplex:
    return load_complex(str(DATA / name))


@pytest.fixture(scope="session")
def ex1() -> AgentSystem:
    return _system("ex1.json")


@pytest.fixture(scope="session")
def ex2() -> AgentSystem:
    return _system("ex2.json")


@pytest.fixture(scope="session")
def ex3() -> AgentSystem:
    return _system("ex3.json")


@pytest.fixture(scope="session")
def ex4() -> AgentSystem:
    return _system("ex4.json")


@pytest.fixture(scope="session")
def gap() -> AgentSystem:
    return _system("gap.json")


@pytest.fixture(scope="session")
def tri_filled() -> SimplicialComplex:
    return _complex("tri_filled.json")


@pytest.fixture(scope="session")
def tri_unfilled() -> SimplicialComplex:
    return _complex("tri_unfilled.json")


@pytest.fixture(scope="session")
def plugged() -> SimplicialComplex:
    return _complex("plugged.json")


@pytest.fixture(scope="session")
def c4() -> SimplicialComplex:
    return _complex("c4.json")


@pytest.fixture(scope="session")
def c5() -> SimplicialComplex:
    return _complex("c5.json")


@pytest.fixture(scope="session")
def wedge() -> SimplicialComplex:
    return _complex("wedge.json")
