import pytest

from groupcond.catalog import builtin_catalog, data_path
from groupcond.elements import MatrixElement, Permutation
from groupcond.group import group_from_definition

CATALOG = {e.name: e for e in builtin_catalog()}


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


def mat(rows, p):
    return MatrixElement(rows, p)


def naive_closure(gens, identity):
    """Element-level closure, independent of the Cayley table."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


@pytest.fixture(scope="session")
def groups():
    return {name: group_from_definition(e.definition) for name, e in CATALOG.items()}


@pytest.fixture(scope="session")
def sl25(groups):
    return groups["SL(2,5)"]


@pytest.fixture(scope="session")
def a5(groups):
    return groups["A5"]


@pytest.fixture(scope="session")
def s4(groups):
    return groups["S4"]


@pytest.fixture(scope="session")
def s3(groups):
    return groups["S3"]


@pytest.fixture
def table_path():
    return lambda name: data_path("tables", f"{name}.table")


@pytest.fixture
def group_path():
    return lambda name: data_path("groups", f"{name}.group")
