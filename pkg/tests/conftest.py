from __future__ import annotations

import pytest

from braid_monodromy.config import RunConfig


@pytest.fixture(scope="session")
def cfg() -> RunConfig:
    return RunConfig()


_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store a one-line verdict for the acceptance summary."""

    def _record(name: str, ok: bool, detail: str = "") -> bool:
        _ACCEPTANCE[name] = (bool(ok), detail)
        print(f"{name}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}")
