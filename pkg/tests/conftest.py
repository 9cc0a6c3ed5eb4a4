import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

TIER = int(os.environ.get("QTFC_TIER", "1"))


def pytest_collection_modifyitems(config, items):
    for item in items:
        for tier in (1, 2):
            if item.get_closest_marker(f"tier{tier}") and TIER < tier:
                item.add_marker(pytest.mark.skip(reason=f"tier {tier}; set QTFC_TIER={tier} to run"))
