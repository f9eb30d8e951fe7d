import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from lapspec.explorer.sampling import sample_digraph, sample_standardized, trial_rng
from lapspec.graph import complete_digraph, cycle_digraph, empty_digraph, new_digraph
from lapspec.laplacian import k_tilde_laplacian, l_k_matrix, standardize, zero_laplacian

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def fuzz_corpus(seed=2024, per_n=6, orders=range(2, 10)):
    """Named standardized Laplacians: fixed constructions plus random ones."""
    out = []
    for n in (2, 3, 4, 7):
        out.append((f"K{n}", k_tilde_laplacian(n)))
        out.append((f"zero{n}", zero_laplacian(n)))
    for n in (3, 5, 8):
        for k in range(1, n):
            out.append((f"L{k}({n})", l_k_matrix(n, k)))
    out.append(("two-2-cycles", standardize(new_digraph(4, [(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1)]))))
    out.append(("path3", standardize(new_digraph(3, [(0, 1, 1), (1, 2, 1)]))))
    for n in orders:
        for t in range(per_n):
            rng = trial_rng(seed + n, t)
            if t % 3 == 0:
                out.append((f"dense{n}.{t}", sample_standardized(n, rng)))
            elif t % 3 == 1:
                out.append((f"sparse{n}.{t}", sample_standardized(n, rng, density=0.3)))
            else:
                out.append((f"digraph{n}.{t}", standardize(sample_digraph(n, rng, density=0.4))))
    return out


CORPUS = fuzz_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def small_digraphs():
    return [complete_digraph(4), empty_digraph(4), cycle_digraph(5),
            new_digraph(3, [(0, 1, 1), (1, 2, 1)]),
            new_digraph(4, [(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1)])]


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: dict[str, dict] = {}


@pytest.fixture
def criterion(request):
    mark = request.node.get_closest_marker("criterion")
    entry = {"number": mark.args[0], "title": mark.args[1], "detail": "", "outcome": "FAIL"}
    ACCEPTANCE[request.node.nodeid] = entry
    return entry


def pytest_runtest_logreport(report):
    entry = ACCEPTANCE.get(report.nodeid)
    if entry is None:
        return
    if report.failed:
        entry["outcome"] = "FAIL"
    elif report.when == "call" and report.passed:
        entry["outcome"] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for entry in sorted(ACCEPTANCE.values(), key=lambda e: e["number"]):
        terminalreporter.write_line(
            f"criterion {entry['number']:>2} {entry['outcome']}: {entry['title']} | {entry['detail']}")
