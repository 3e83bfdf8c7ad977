import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def partitions(max_part=5, max_len=5):
    return st.lists(st.integers(0, max_part), max_size=max_len).map(
        lambda xs: tuple(sorted((x for x in xs if x), reverse=True)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
