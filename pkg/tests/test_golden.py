"""Byte-stable regression against the version-controlled idempotent files."""

import json
import pathlib

import pytest

from brauer.idempotents import IdempotentResult, fusion_idempotent
from brauer.tableaux import enumerate_updown

GOLDEN_DIR = pathlib.Path(__file__).parent / 'golden'


@pytest.mark.parametrize('n', [1, 2, 3])
def test_golden_idempotents(n):
    stored = json.loads((GOLDEN_DIR / f'idempotents_n{n}.json').read_text())
    tabs = list(enumerate_updown(n))
    assert len(stored) == len(tabs)
    for tableau, payload in zip(tabs, stored):
        fresh = fusion_idempotent(tableau).to_json()
        del fresh['timing']
        assert fresh == payload, tableau.to_text()


@pytest.mark.parametrize('n', [1, 2, 3])
def test_golden_files_load_as_results(n):
    stored = json.loads((GOLDEN_DIR / f'idempotents_n{n}.json').read_text())
    for payload in stored:
        result = IdempotentResult.from_json(payload)
        assert result.method == 'fusion'
        assert len(result.tableau) == n
