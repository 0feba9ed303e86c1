from __future__ import annotations

import pytest

from symbolpair import make_field


@pytest.fixture(scope="session")
def gf8():
    return make_field(2, 3, [1, 0, 1, 1])


@pytest.fixture(scope="session")
def gf27():
    return make_field(3, 3, [1, 2, 0, 1])


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)
