"""Acceptance gate: every criterion runs at its stated scope and prints a
PASS/FAIL line (visible with pytest -s, and via the CLI selftest verb)."""

import pytest

from contactsurgery.acceptance import CRITERIA


@pytest.mark.parametrize("code,title,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance_criterion(code, title, check):
    ok, detail = check()
    print(f"{code} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    assert ok, f"{code} {title}: {detail}"
