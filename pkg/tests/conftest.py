from hypothesis import strategies as st

from rookeq import Partition


@st.composite
def partitions(draw, max_parts=8, max_size=10):
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_parts))
    return Partition(sorted(parts, reverse=True))


def naive_partitions(n, largest=None):
    """Independent generator used as a reference; order-free."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, largest) + 1):
        for rest in naive_partitions(n - first, first):
            yield (first, *rest)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
