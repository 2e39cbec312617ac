"""One test per acceptance criterion; prints a PASS/FAIL line for each.

Run directly (``python3 tests/test_acceptance.py``) for the plain report.
"""

import pytest

from colordesigns import acceptance

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # direct execution
    ACCEPTANCE_LINES = {}


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number):
    res = acceptance.CRITERIA[number - 1]()
    ACCEPTANCE_LINES[number] = res.line()
    print(res.line())
    for d in res.details:
        print("    " + d)
    assert res.passed, "\n".join(res.details)


if __name__ == "__main__":
    for r in acceptance.run():
        print(r.line())
