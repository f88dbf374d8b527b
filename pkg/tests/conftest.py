import importlib

import pytest


def _available_backends():
    names = ["python"]
    try:
        importlib.import_module("kummerbessel._ckernels")
        names.append("cython")
    except ImportError:
        pass
    return names


@pytest.fixture(params=_available_backends())
def kernels(request):
    """Each available kernel backend in turn."""
    name = "_ckernels" if request.param == "cython" else "_pykernels"
    return importlib.import_module(f"kummerbessel.{name}")


_VERDICTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_VERDICTS] = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""
    lines = request.config.stash[_VERDICTS]

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}"
        lines.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
