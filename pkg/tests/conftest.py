from __future__ import annotations

import pytest

from bossfilter import _kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Compile (or load from disk cache) every jitted kernel up front so no
    # individual test pays the JIT cost inside a timing window.
    _kernels.warm_up()
