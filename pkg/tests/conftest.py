import pytest

from dommedian.graph import complete_bipartite, cycle_graph, new_graph, path_graph, star_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def p2():
    return path_graph(2)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k13():
    return star_graph(3)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)


@pytest.fixture
def cor34():
    # triangle a,b,c with pendants d,e at a and f,g at b
    return new_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        verdict = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"{verdict}  {marker.args[0]}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
