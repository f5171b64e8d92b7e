import numpy as np
import pytest

import spreadlab


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile every jitted kernel once so timed tests measure compute,
    not JIT latency (disk-cached after the first ever session)."""
    spreadlab.eigenvalues(np.eye(3))
    spreadlab.symmetric_eigenvalues(np.eye(3))
    spreadlab.exhaustive_search(2, threads=1)
    spreadlab.local_search(2, seed=0, restarts=1, threads=1)
