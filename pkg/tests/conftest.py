import pytest

from taurank import fixtures


@pytest.fixture(scope="session")
def alg_a():
    return fixtures.load_fixture("ALG-A")


@pytest.fixture(scope="session")
def alg_b():
    return fixtures.load_fixture("ALG-B")


@pytest.fixture(scope="session")
def alg_b0():
    return fixtures.load_fixture("ALG-B0")


@pytest.fixture(scope="session")
def alg_c():
    return fixtures.load_fixture("ALG-C")


@pytest.fixture(scope="session")
def alg_k():
    return fixtures.load_fixture("ALG-K")


@pytest.fixture(scope="session")
def all_fixture_algebras():
    return {name: fixtures.load_fixture(name) for name in fixtures.FIXTURE_NAMES}
