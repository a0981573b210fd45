import pytest
from hypothesis import HealthCheck, settings

from ramanujan_pi.catalog import load_catalog
from ramanujan_pi.hyper import BranchPolicy
from ramanujan_pi.transform import solve_beta_complement

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def level2_degree5(catalog):
    return catalog.transformations[0]


@pytest.fixture(scope="session")
def solution_points(level2_degree5):
    return solve_beta_complement(level2_degree5)


@pytest.fixture(scope="session")
def upper_solution_points(level2_degree5):
    return solve_beta_complement(level2_degree5, bp=BranchPolicy.UPPER)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
