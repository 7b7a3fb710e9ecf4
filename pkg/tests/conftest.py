from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from sdclass.augment import augment, make_node  # noqa: E402
from sdclass.code import SelfDualCode  # noqa: E402


@pytest.fixture(scope="session")
def levels():
    """Search nodes for every length 2..16, keyed by length."""
    out = {2: [make_node(SelfDualCode.i2())]}
    for k in range(2, 9):
        out[2 * k] = augment(out[2 * k - 2], k)
    return out


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
