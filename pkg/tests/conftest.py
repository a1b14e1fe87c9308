import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--large-rank",
        action="store_true",
        default=False,
        help="run the gated rank-5 suite (also REDCHERN_LARGE_RANK=1)",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "large: gated large-rank checks, enabled with --large-rank"
    )


def pytest_collection_modifyitems(config, items):
    enabled = config.getoption("--large-rank") or os.environ.get(
        "REDCHERN_LARGE_RANK"
    ) == "1"
    if enabled:
        return
    skip = pytest.mark.skip(reason="needs --large-rank (or REDCHERN_LARGE_RANK=1)")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)
