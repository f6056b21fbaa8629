from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--long-tests", action="store_true", default=False,
                     help="run the q=81 and q=64 reproduction items")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-tests"):
        return
    skip = pytest.mark.skip(reason="needs --long-tests")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
