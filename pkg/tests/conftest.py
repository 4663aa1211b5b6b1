import pytest

from equivalg.action import ModuleCategoryAction
from equivalg.instances import BUNDLED


@pytest.fixture(scope="session")
def actions():
    """Module-category actions of the bundled weak actions, built once."""
    return {name: ModuleCategoryAction(make()) for name, make in BUNDLED.items()}


@pytest.fixture(scope="session")
def probes(actions):
    return {name: act.default_probes() for name, act in actions.items()}


ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is not None and report.when == "call":
        label = item.function.__doc__.strip().splitlines()[0]
        earlier = ACCEPTANCE.get(number, (label, True))[1]
        ACCEPTANCE[number] = (label, earlier and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        label, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {label}")
