import pytest

# Filled in by tests/test_acceptance.py: name -> (ok, detail).
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[name] = (bool(ok), detail)
    assert ok, f"{name}: {detail}"


def pytest_addoption(parser):
    parser.addoption(
        "--run-long", action="store_true", default=False,
        help="run the exhaustive distance sweeps for 30 <= n <= 100",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="needs --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE.items():
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        tr.write_line(f"ACCEPTANCE[{name}]: {status}{suffix}")
