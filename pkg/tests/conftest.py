import random

import pytest

from antigeometry.model import DEFAULT


@pytest.fixture
def cfg():
    return DEFAULT


@pytest.fixture
def rng():
    return random.Random(12345)


# acceptance criteria report one line each at the end of the run
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion: ``criterion(n, title)`` then ``.note(text)``."""

    class Rec:
        n = None
        title = ""
        detail = ""

        def __call__(self, n, title):
            self.n, self.title = n, title
            return self

        def note(self, text):
            self.detail = text

    rec = Rec()
    yield rec
    if rec.n is not None:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        ACCEPTANCE[rec.n] = (rec.title, ok, rec.detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        line = f"criterion {n} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
