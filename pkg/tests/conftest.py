import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from solvcrit.catalog import catalog_group

_CACHE = {}


@pytest.fixture
def group():
    """Memoized catalog lookup; heavy groups (M11, M12, A8) build once."""

    def get(name):
        if name not in _CACHE:
            _CACHE[name] = catalog_group(name)
        return _CACHE[name]

    return get
