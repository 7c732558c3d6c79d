import pytest

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Call with (label, ok, detail); records the line and asserts ok."""

    def report(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[label] = (ok, detail)
        print(f"{label}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"{label} failed: {detail}"

    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
