import pytest

from cubediam.census import full_census
from cubediam.cube import metric_generators

# filled in by test_acceptance; echoed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def census_cache():
    cache = {}

    def get(n, metric, engine=None):
        engine = engine or ("compact" if n == 2 else "hashed")
        key = (n, metric, engine)
        if key not in cache:
            cache[key] = full_census(metric_generators(metric, n), engine=engine)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
