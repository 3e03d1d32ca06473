import pathlib

import pytest

from ncrewrite.cli import Presentation, parse_presentation

PRESENTATIONS = pathlib.Path(__file__).resolve().parent.parent / "presentations"


def load(name: str) -> Presentation:
    return parse_presentation((PRESENTATIONS / name).read_text())


@pytest.fixture(scope="session")
def weyl():
    return load("weyl.pres")


@pytest.fixture(scope="session")
def comm3():
    return load("commuting3.pres")


@pytest.fixture(scope="session")
def comm4():
    return load("commuting4.pres")


@pytest.fixture(scope="session")
def sl2():
    return load("sl2.pres")


@pytest.fixture(scope="session")
def dup_lhs():
    return load("dup_lhs.pres")


@pytest.fixture(scope="session")
def aba():
    return load("aba.pres")
