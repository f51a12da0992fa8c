import pytest

# criterion number -> list of (test id, passed)
_CRITERIA = {}

CRITERION_TITLES = {
    1: "construction suite (ranks <= 6)",
    2: "orbit oracle (rank <= 4)",
    3: "square-zero orbit data",
    4: "rank-2 Groebner reproductions",
    5: "small-cone checks",
    6: "point-count slope for sl2 C_2(N)",
    7: "threshold double derivation (l, r <= 20)",
    8: "bound tables (l <= 8, r <= 4)",
    9: "rank-2 ceiling consistency (r <= 5)",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA.setdefault(marker.args[0], []).append((item.nodeid, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        results = _CRITERIA[n]
        failed = [nid for nid, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {n}: {status}  {CRITERION_TITLES.get(n, '')} "
                      f"({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"    failed: {nid.split('::', 1)[-1]}")
