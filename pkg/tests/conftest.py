import pytest
from hypothesis import settings

from youngwalls.cartan import CartanType
from youngwalls.perfect_crystal import build_crystal
from youngwalls.walls import context

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

TYPES = [CartanType.E6_2, CartanType.F4_1]


@pytest.fixture(params=TYPES, ids=lambda t: t.value)
def ctype(request):
    return request.param


@pytest.fixture
def crystal(ctype):
    return build_crystal(ctype)


@pytest.fixture
def ctx(ctype):
    return context(ctype)


@pytest.fixture(scope="session")
def e6():
    return build_crystal("e6-2")


@pytest.fixture(scope="session")
def f4():
    return build_crystal("f4-1")


@pytest.fixture(scope="session")
def e6ctx():
    return context("e6-2")


@pytest.fixture(scope="session")
def f4ctx():
    return context("f4-1")


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion; lines are repeated in the summary."""

    def report(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
