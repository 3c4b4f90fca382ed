import math

import pytest
from hypothesis import HealthCheck, settings

from hhcert.fnmodel import catalog_get

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# filled by tests/test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


# (label, name, params, safe sampling window) for every catalog entry
CATALOG_SAMPLES = [
    ("exp", "exp", (), (-1.0, 3.0)),
    ("neg_log", "neg_log", (), (0.2, 4.0)),
    ("sqrt", "sqrt", (), (0.1, 4.0)),
    ("pow_s", "pow_s", (0.3,), (0.1, 4.0)),
    ("pow", "pow", (2.5,), (0.1, 3.0)),
    ("one_minus_x_pow_n", "one_minus_x_pow_n", (3.0,), (-1.0, 2.0)),
    ("reciprocal", "reciprocal", (), (0.2, 4.0)),
    ("poly", "poly", (1.0, -2.0, 0.5, 1.0), (-2.0, 2.0)),
]


@pytest.fixture(params=CATALOG_SAMPLES, ids=[c[0] for c in CATALOG_SAMPLES])
def catalog_sample(request):
    label, name, params, window = request.param
    return catalog_get(name, params), window


def close(x, y, rel=1e-12, abs_=0.0):
    return math.isclose(x, y, rel_tol=rel, abs_tol=abs_)
