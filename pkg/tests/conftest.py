import pytest

from mirrorbench import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timed tests measure the run, not the JIT."""
    _kernels.warm_up()
