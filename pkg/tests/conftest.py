import pytest
from hypothesis import HealthCheck, settings

from scripts.config import get_settings
from tests.strategies import graph

settings.register_profile(
    "chaingraph",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("chaingraph")


@pytest.fixture(autouse=True)
def _fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def g_a():
    return graph("abcd", "b->a", "b->c", "a->d", "c->d")


@pytest.fixture
def g_a_lines():
    return graph("abcd", "a--b", "b--c", "a->d", "c->d")


@pytest.fixture
def g_e():
    return graph("abcdefg", "a->c", "c--d", "d--e", "b->e", "b->g", "d->g", "d->f")


@pytest.fixture
def g_c():
    return graph(["p", "q", "u", "v"], "u->p", "p--q", "v->q")


@pytest.fixture
def g_n():
    return graph("abcd", "a->c", "b->c", "c->d", "a->d")


@pytest.fixture
def g_d():
    return graph("abcd", "a->b", "d->b", "c->b", "a--c", "c--d")
