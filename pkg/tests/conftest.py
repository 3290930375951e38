import os

import pytest
from hypothesis import HealthCheck, settings

from italdom import _pykernels

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

try:
    from italdom import _ckernels
except ImportError:
    _ckernels = None

KERNELS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


@pytest.fixture(params=KERNELS, ids=lambda m: m.NAME)
def kernel(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
