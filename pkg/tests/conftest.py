from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
small_ints = st.integers(min_value=-20, max_value=20)


def polys(max_degree: int = 5):
    from isingff.exact import Poly

    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree: int = 4):
    return polys(max_degree).filter(lambda p: not p.is_zero())


def series(min_val: int = 0, max_val: int = 2, order: int = 8):
    from isingff.exact import Series

    return st.builds(
        lambda v, cs: Series(cs, val=v, order=order),
        st.integers(min_value=min_val, max_value=max_val),
        st.lists(rationals, min_size=1, max_size=order),
    )


F = Fraction


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
