import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from asymcrit.kernel import PolyRing

settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60
)
settings.load_profile("exact")


def random_poly(ring: PolyRing, rng: random.Random, degree: int, nterms: int, coeff: int = 9):
    """Random polynomial with small integer coefficients and total degree <= degree."""
    terms = {}
    n = ring.ngens
    for _ in range(nterms):
        left = degree
        m = []
        for _ in range(n):
            e = rng.randint(0, left)
            m.append(e)
            left -= e
        rng.shuffle(m)
        c = rng.randint(-coeff, coeff)
        if c:
            terms[tuple(m)] = terms.get(tuple(m), 0) + c
    return ring.from_dict(terms)


@pytest.fixture
def xyz():
    return PolyRing(["x", "y", "z"])


@pytest.fixture
def z2():
    return PolyRing(["z1", "z2"])


def frac(s):
    return Fraction(s)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    if hasattr(item, "callspec"):
        title = f"{title} [{item.callspec.id}]"
    if rep.passed and not hasattr(rep, "wasxfail"):
        status = "PASS"
    else:
        status = "FAIL"
    note = " (expected failure, see notes)" if hasattr(rep, "wasxfail") else ""
    line = f"criterion {number:>2} {status}: {title} [{rep.duration:.1f}s]{note}"
    item.config._criteria.append((number, line))
    print("\n" + line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not getattr(config, "_criteria", None):
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(config._criteria, key=lambda t: t[0]):
        terminalreporter.write_line(line)
