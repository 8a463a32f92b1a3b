import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
CORPUS = pathlib.Path(__file__).parent / "corpus"


@pytest.fixture(scope="session")
def pizza_bytes() -> bytes:
    return (FIXTURES / "pizza_menu.html").read_bytes()


@pytest.fixture(scope="session")
def corpus_files() -> list[pathlib.Path]:
    files = sorted(CORPUS.glob("*.html"))
    assert len(files) >= 25, "checked-in corpus must hold at least 25 pages"
    return files


@pytest.fixture(scope="session")
def corpus_trees(corpus_files):
    """Parsed corpus, shared across tests; the engine clones its input,
    so handing out the same trees is safe."""
    from d2snap import parse_html

    return {path.name: parse_html(path.read_bytes()) for path in corpus_files}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion, printed after the run."""
    lines = []
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if "test_acceptance" not in getattr(report, "nodeid", ""):
                continue
            name = report.nodeid.split("::")[-1]
            verdict = "PASS" if status == "passed" else "FAIL"
            lines.append((name, verdict))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(lines):
        terminalreporter.write_line(f"ACCEPTANCE {name}: {verdict}")
