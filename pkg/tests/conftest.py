import os
import sys

import pytest

# Ensure the repository root is on sys.path so tests can import
# `geometry`, `solvers`, ... during collection.
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from geometry.norm_core import make_pnorm  # noqa: E402


@pytest.fixture
def l2():
    return make_pnorm(2)


@pytest.fixture
def l4():
    return make_pnorm(4)


def sweep_instances(default: int = 5) -> int:
    """Instances per (p, n) cell of the long sweeps; NORMDISK_SWEEP_INSTANCES overrides."""
    return int(os.getenv("NORMDISK_SWEEP_INSTANCES", default))
