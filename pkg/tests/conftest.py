"""
Shared pytest configuration
"""
import os
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


def pytest_collection_modifyitems(config, items):
    if os.getenv("RUN_FULL_SCALE", "0") == "1":
        return
    skip = pytest.mark.skip(reason="set RUN_FULL_SCALE=1 to run full-size catalog computations")
    for item in items:
        if "full_scale" in item.keywords:
            item.add_marker(skip)
