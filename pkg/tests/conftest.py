import pytest

from tanfrac.precision import PrecisionPolicy, const_pi


@pytest.fixture(scope="session")
def policy():
    return PrecisionPolicy(256)


@pytest.fixture(scope="session")
def pi256(policy):
    return const_pi(policy)


@pytest.fixture(scope="session")
def suite_reports(policy):
    """One full suite run shared by the acceptance tests (it is not free)."""
    from tanfrac.suite import run_suite

    return {r.identity_id: r for r in run_suite(None, policy, 10_000)}
