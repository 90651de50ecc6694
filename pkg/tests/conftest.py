from hypothesis import strategies as st

from hookdec.partitions import Partition, enumerate_partitions


@st.composite
def partitions(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.sampled_from(enumerate_partitions(n)))


@st.composite
def partition_pairs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = enumerate_partitions(n)
    return draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


def P(*parts):
    return Partition(parts)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
