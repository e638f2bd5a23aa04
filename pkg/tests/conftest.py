"""Shared fixtures.

Root systems and fusion contexts are immutable once built, so everything
is cached at session scope; S-matrices large enough to matter (the D
family) are cached too.
"""

import pytest

from fusionq import FusionContext, build_root_system, build_smatrix


@pytest.fixture(scope="session")
def make_rs():
    cache = {}

    def get(family, rank):
        key = (family, rank)
        if key not in cache:
            cache[key] = build_root_system(family, rank)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def make_ctx(make_rs):
    cache = {}

    def get(family, rank, level):
        key = (family, rank, level)
        if key not in cache:
            cache[key] = FusionContext(make_rs(family, rank), level)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def make_sm(make_ctx):
    cache = {}

    def get(family, rank, level):
        key = (family, rank, level)
        if key not in cache:
            cache[key] = build_smatrix(make_ctx(family, rank, level))
        return cache[key]

    return get
