import pytest

from privword import BUILTIN_WORDS, build_index


@pytest.fixture(scope="session")
def tm_index():
    """Thue-Morse index certified far enough for every sweep in the suite."""
    return build_index(BUILTIN_WORDS["tm"], 512)


@pytest.fixture(scope="session")
def tm_index_small():
    return build_index(BUILTIN_WORDS["tm"], 64)


@pytest.fixture(scope="session")
def kappa_index():
    return build_index(BUILTIN_WORDS["kappa"], 16)


@pytest.fixture(scope="session")
def chacon_index():
    return build_index(BUILTIN_WORDS["chacon"], 40)


@pytest.fixture(scope="session")
def hmu_index():
    return build_index(BUILTIN_WORDS["h-mu"], 40)
