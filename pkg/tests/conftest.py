import pytest

from wcn import kernels

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=kernels.available())
def backend(request, monkeypatch):
    """Route every kernel call through one backend for the duration of a test."""
    impl = kernels.load(request.param)
    for name in ("segment_stats", "powsum_mod", "factor_batch"):
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
