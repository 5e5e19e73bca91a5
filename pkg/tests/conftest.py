import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest
from hypothesis import HealthCheck, settings

from quasiext.chartab import character_table
from quasiext.groups import builtin
from quasiext.perm import center, normal_subgroups
from quasiext.triples import make_triple


settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def normal_of_order(G, n):
    return next(N for N in normal_subgroups(G) if N.order == n)


def faithful(N):
    return next(i for i, chi in enumerate(character_table(N.group)) if chi.kernel().order == 1)


@pytest.fixture(scope="module")
def q8z():
    G = builtin("quaternion8")
    Z = center(G)
    return make_triple(G, Z, faithful(Z))


@pytest.fixture(scope="module")
def sl23():
    G = builtin("sl23")
    N = normal_of_order(G, 8)
    th = next(i for i, chi in enumerate(character_table(N.group)) if chi.values[0] == 2)
    return make_triple(G, N, th)


@pytest.fixture(scope="module")
def sl25():
    G = builtin("sl25")
    Z = center(G)
    return make_triple(G, Z, faithful(Z))


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[k])
