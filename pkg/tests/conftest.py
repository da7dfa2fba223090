import pytest

ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""

    def add(number, title, ok, detail, seconds, limit):
        status = "PASS" if ok and seconds < limit else "FAIL"
        line = f"criterion {number}: {status}  {title}  [{detail}; {seconds:.2f}s < {limit}s]"
        ACCEPTANCE.append(line)
        print(line)
        return status == "PASS"

    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
