"""Check records and suite reports shared by the verification drivers."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    inputs: str
    passed: bool
    detail: str = ''

    @property
    def digest(self) -> str:
        return hashlib.sha1(f'{self.check_id}|{self.inputs}'.encode()).hexdigest()[:10]

    def to_json(self) -> dict:
        return {'id': self.check_id, 'inputs': self.inputs, 'digest': self.digest,
                'pass': self.passed, 'detail': self.detail}


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0

    def check(self, check_id: str, inputs: str, passed: bool, detail: str = '') -> bool:
        self.records.append(CheckRecord(check_id, inputs, bool(passed), detail))
        return bool(passed)

    def extend(self, other: 'VerificationReport'):
        self.records.extend(other.records)
        self.wall_time += other.wall_time

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    def all_passed(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json(self) -> dict:
        # wall time is reported separately (stderr) to keep stdout deterministic
        return {'suite': self.suite,
                'records': [r.to_json() for r in self.records],
                'total': self.total, 'passed': self.passed, 'failed': self.failed}
