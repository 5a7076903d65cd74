import functools

import pytest

from treerooted import planar_map, words


@functools.lru_cache(maxsize=None)
def maps_of_size(n):
    return tuple(planar_map.enumerate_maps(n))


@functools.lru_cache(maxsize=None)
def shuffles_of_size(n):
    return tuple(words.enumerate_paren_shuffles(n))


@pytest.fixture(scope="session")
def maps():
    return maps_of_size


@pytest.fixture(scope="session")
def shuffles():
    return shuffles_of_size


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
