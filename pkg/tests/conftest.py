import pytest
from hypothesis import HealthCheck, settings, strategies as st

from quarticrings import BinaryCubicForm, BinaryQuarticForm, word_element
from quarticrings.resolvent import gl2_elements

settings.register_profile("repo", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

small = st.integers(-6, 6)
quartics = st.builds(BinaryQuarticForm, small, small, small, small, small)
cubics = st.builds(BinaryCubicForm, small, small, small, small)
words = st.text(alphabet="srt", max_size=6)
gl2 = words.map(word_element)


_GL2_BOX = gl2_elements(3)


def gl2_bounded():
    """GL2(Z) elements with entries in [-3, 3]."""
    return st.sampled_from(_GL2_BOX)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
