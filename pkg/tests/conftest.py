from __future__ import annotations

import pytest

from curvestab.curve_model import validate_curve_config
from curvestab.numerical_k import NumClass

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(number, ok, text):
    ACCEPTANCE[number] = (ok, text)


@pytest.fixture
def node():
    return validate_curve_config("node")


@pytest.fixture
def tacnode():
    return validate_curve_config("tacnode")


def nodal(*xs):
    return NumClass.from_flat(xs, 1, 1, 1)


def tac(*xs):
    return NumClass.from_flat(xs, 1, 1, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}")
