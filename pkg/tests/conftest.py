import pytest

from zoo import build, spec


@pytest.fixture(scope="session")
def sweedler():
    return build(spec("taft", n=2))


@pytest.fixture(scope="session")
def taft3():
    return build(spec("taft", n=3))


@pytest.fixture(scope="session")
def k_d7():
    return build(spec("group_algebra", group="dihedral", n=7))


@pytest.fixture(scope="session")
def k_d7_dual():
    return build(spec("dual_group_algebra", group="dihedral", n=7, conductor=7))


@pytest.fixture(scope="session")
def k_c3():
    return build(spec("group_algebra", group="cyclic", n=3))


@pytest.fixture(scope="session")
def pointed8():
    return build(spec("pointed8"))


@pytest.fixture(scope="session")
def nonpointed8():
    return build(spec("nonpointed8"))
