import pytest

from divprod import build_spf_table


@pytest.fixture(scope="session")
def spf_10k():
    return build_spf_table(10**4)


@pytest.fixture(scope="session")
def spf_100k():
    return build_spf_table(10**5)
