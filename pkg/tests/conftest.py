import pytest

from winv.store import Context

ACCEPTANCE = {}


@pytest.fixture
def ctx():
    return Context()


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion for the summary."""

    class Recorder:
        def __call__(self, number, title):
            self.number, self.title = number, title
            ACCEPTANCE[number] = (title, False, "did not finish")
            return self

        def done(self, ok, detail=""):
            ACCEPTANCE[self.number] = (self.title, ok, detail)
            return ok

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = "criterion %d: %s - %s" % (number, "PASS" if ok else "FAIL", title)
        if detail:
            line += " (%s)" % detail
        terminalreporter.write_line(line)
