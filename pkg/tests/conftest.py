import pytest

from ngramnorm import TrainingPair, build_dictionary, train

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        _CRITERIA.setdefault(number, (title, []))[1].append(status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, statuses = _CRITERIA[number]
        status = next(s for s in ("FAIL", "PASS", "SKIP") if s in statuses)
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


@pytest.fixture
def worked_pairs():
    return [TrainingPair("d2", "dito"), TrainingPair("dhil", "dahil")]


@pytest.fixture
def worked_dictionary(worked_pairs):
    return build_dictionary(worked_pairs, k_max=2)


@pytest.fixture
def worked_model(worked_pairs):
    return train(worked_pairs, ["dito", "dahil"]).model
