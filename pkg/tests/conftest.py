from contextlib import contextmanager

import pytest


@pytest.fixture
def acceptance(capsys):
    """Announce a criterion verdict on the live terminal, then let pytest judge."""

    @contextmanager
    def _section(number, name):
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\nACCEPTANCE {number} {name}: FAIL")
            raise
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {name}: PASS")

    return _section
