import pytest

from bolpq.ff import make_context
from bolpq.loopcore import build_bol_loop, cyclic_group
from bolpq.spectrum import theta_from_gamma

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE[number] = (bool(passed), detail)
        assert passed, f"criterion {number}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def ctx73():
    return make_context(7, 3)


@pytest.fixture(scope="session")
def ctx53():
    return make_context(5, 3)


@pytest.fixture(scope="session")
def bruck73(ctx73):
    return build_bol_loop(ctx73, theta_from_gamma(ctx73, 4))


@pytest.fixture(scope="session")
def gamma3_73(ctx73):
    return build_bol_loop(ctx73, theta_from_gamma(ctx73, 3))


@pytest.fixture(scope="session")
def group73(ctx73):
    return build_bol_loop(ctx73, theta_from_gamma(ctx73, 1))


@pytest.fixture(scope="session")
def bruck53(ctx53):
    return build_bol_loop(ctx53, theta_from_gamma(ctx53, ctx53.elem(3, 0)))


@pytest.fixture(scope="session")
def z15():
    return cyclic_group(15)
