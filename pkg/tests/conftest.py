import random

import pytest

SEED = 987123

# one "[criterion N] label: PASS|FAIL" line per acceptance criterion,
# echoed after the test summary so they survive output capture
CRITERIA = pytest.StashKey()


@pytest.fixture
def rng():
    # fixed seed, printed so a failing run can be replayed exactly
    print(f"rng seed: {SEED}")
    return random.Random(SEED)


@pytest.fixture
def criterion(request):
    from contextlib import contextmanager

    lines = request.config.stash.setdefault(CRITERIA, [])

    @contextmanager
    def run(number, label):
        try:
            yield
        except BaseException:
            lines.append(f"[criterion {number}] {label}: FAIL")
            raise
        lines.append(f"[criterion {number}] {label}: PASS")

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(CRITERIA, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
