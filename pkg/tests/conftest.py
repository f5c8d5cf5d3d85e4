import pathlib

import pytest

import softdito as sd

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load(name: str) -> sd.SpecDocument:
    return sd.parse((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def p1() -> sd.SpecDocument:
    return load("p1.sdt")


@pytest.fixture(scope="session")
def p2() -> sd.SpecDocument:
    return load("p2.sdt")


@pytest.fixture(scope="session")
def p3() -> sd.SpecDocument:
    return load("p3.sdt")


@pytest.fixture(scope="session")
def p4() -> sd.SpecDocument:
    return load("p4.sdt")
