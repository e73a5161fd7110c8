import pytest

from dicksonperm import _sweeps


@pytest.fixture(scope="session", autouse=True)
def warm_sweep_kernels():
    # Compile (or load from cache) the jitted sweeps before any timed test.
    _sweeps.perm_flags(5, 1, 3)
    _sweeps.identity_flags(5, 1, 3)
    for _ in _sweeps.iter_image_blocks(5, 1, 3):
        pass
