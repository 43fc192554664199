from dataclasses import dataclass

import pytest

from swissag.curves import CurveDescriptor, enumerate_affine_places, make_descriptor
from swissag.swiss import SwissData, build_swiss_data


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run instances over fields larger than GF(64)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow tier; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@dataclass
class Instance:
    desc: CurveDescriptor
    places: list
    swiss: SwissData


def _instance(family, q, n=None) -> Instance:
    desc = make_descriptor(family, q, n)
    places = enumerate_affine_places(desc)
    return Instance(desc, places, build_swiss_data(desc, places))


@pytest.fixture(scope="session")
def gk2():
    return _instance("gk", 2)


@pytest.fixture(scope="session")
def abq23():
    return _instance("abq", 2, 3)


@pytest.fixture(scope="session")
def ggk223():
    return _instance("ggk2", 2, 3)


@pytest.fixture(scope="session")
def ggs25():
    return _instance("ggs", 2, 5)


@pytest.fixture(scope="session")
def ggk225():
    return _instance("ggk2", 2, 5)
