import functools

import pytest

from hopfpbw.presets import build_problem


@functools.lru_cache(maxsize=None)
def cached_problem(name: str, with_kappa: bool = False):
    return build_problem(name, with_kappa=with_kappa)


@pytest.fixture(scope="session")
def problem():
    return cached_problem
