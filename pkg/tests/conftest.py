import pytest

from vknot.diagram import parse_gauss_code

TREFOIL = "O1+ O2+ U1+ U2+"
P2 = "O1+ O2- O3- U1+ U3- U2-"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full-size corpora")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size acceptance corpora")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def trefoil():
    return parse_gauss_code(TREFOIL)


@pytest.fixture
def p2():
    return parse_gauss_code(P2)
