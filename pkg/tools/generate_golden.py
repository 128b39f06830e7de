#!/usr/bin/env python3
"""Regenerate the version-controlled golden idempotent files (n <= 3).

Each file holds the fusion results for every updown tableau of that length,
in enumeration order, with the volatile timing field stripped so the files
are byte-stable.
"""

import json
import pathlib

from brauer.idempotents import fusion_idempotent
from brauer.tableaux import enumerate_updown

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / 'tests' / 'golden'


def payload(n: int) -> list:
    rows = []
    for tableau in enumerate_updown(n):
        data = fusion_idempotent(tableau).to_json()
        del data['timing']
        rows.append(data)
    return rows


def main():
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for n in (1, 2, 3):
        path = GOLDEN_DIR / f'idempotents_n{n}.json'
        path.write_text(json.dumps(payload(n), indent=1, sort_keys=True) + '\n')
        print(f'wrote {path}')


if __name__ == '__main__':
    main()
