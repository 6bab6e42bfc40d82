import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from obsrep.geom import Point, Segment, mpq

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

coord = st.integers(-12, 12).map(mpq)
points = st.builds(Point, coord, coord)


@st.composite
def segments(draw, elements=points):
    a = draw(elements)
    b = draw(elements.filter(lambda p: p != a))
    return Segment(a, b)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
