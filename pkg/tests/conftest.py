import pytest

from sigmalab import Alpha, build_sigma_table


@pytest.fixture(scope="session")
def alpha_q():
    return Alpha(0.25)


@pytest.fixture(scope="session")
def table_small(alpha_q):
    return build_sigma_table(5000, alpha_q)


@pytest.fixture(scope="session")
def table_million(alpha_q):
    # shared by the acceptance criteria that scan up to x = 1e6; the
    # half-integer grid snaps its last point to 1000000.5, so the series
    # cutoff N = ceil(x) needs one entry past 1e6
    return build_sigma_table(10**6 + 1, alpha_q)
