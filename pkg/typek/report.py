"""
Verification reports: an ordered list of checks per suite, rendered as text
or as JSON.
"""
from time import perf_counter
from typing import Callable, Iterable, List, Optional
from typek.errors import TypeKError
from typek.utils import get_logger

logger = get_logger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
STATUSES = (PASS, FAIL, SKIP)


class Check:
    """
    A single verified claim with the anchor of the statement it reproduces.
    """

    def __init__(self, id: str, anchor: str, status: str, expected: str, got: str, elapsed: float = 0.0):
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        self.id = id
        self.anchor = anchor
        self.status = status
        self.expected = expected
        self.got = got
        self.elapsed = elapsed

    @classmethod
    def compare(cls, id: str, anchor: str, expected, got, elapsed: float = 0.0) -> 'Check':
        expected, got = str(expected), str(got)
        return cls(id, anchor, PASS if expected == got else FAIL, expected, got, elapsed)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status,
                "expected": self.expected, "got": self.got}

    @classmethod
    def from_json(cls, data: dict) -> 'Check':
        return cls(data["id"], data["anchor"], data["status"], data["expected"], data["got"])

    def __eq__(self, other):
        return isinstance(other, Check) and self.to_json() == other.to_json()

    def __repr__(self):
        return f"<Check {self.id} {self.status}>"


class Report:
    def __init__(self, suite: str, checks: Optional[List[Check]] = None):
        self.suite = suite
        self.checks: List[Check] = list(checks or [])

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        logger.debug(f"{self.suite}: {check.id} {check.status} ({check.elapsed:.3f}s)")
        return check

    def extend(self, checks: Iterable[Check]):
        for check in checks:
            self.add(check)

    def compare(self, id: str, anchor: str, expected, got) -> Check:
        return self.add(Check.compare(id, anchor, expected, got))

    def run(self, id: str, anchor: str, expected, func: Callable[[], object]) -> Check:
        """
        Run ``func`` and compare the text of its result with ``expected``.

        A library error fails the check with its message.
        """
        start = perf_counter()
        try:
            got = func()
        except TypeKError as e:
            logger.debug(f"{self.suite}: {id} raised {e.message}")
            return self.add(Check(id, anchor, FAIL, str(expected), f"error: {e.message}", perf_counter() - start))
        return self.add(Check.compare(id, anchor, expected, got, perf_counter() - start))

    def skip(self, id: str, anchor: str, reason: str) -> Check:
        return self.add(Check(id, anchor, SKIP, "", reason))

    @property
    def summary(self) -> dict:
        return {"pass": sum(c.status == PASS for c in self.checks),
                "fail": sum(c.status == FAIL for c in self.checks)}

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite,
                "checks": [c.to_json() for c in self.checks],
                "summary": self.summary}

    @classmethod
    def from_json(cls, data: dict) -> 'Report':
        return cls(data["suite"], [Check.from_json(c) for c in data["checks"]])

    @classmethod
    def merge(cls, suite: str, reports: Iterable['Report']) -> 'Report':
        merged = cls(suite)
        for report in reports:
            merged.checks.extend(report.checks)
        return merged

    def render(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.id}: {c.got}"
            if c.status == FAIL:
                line += f" (expected {c.expected})"
            lines.append(line)
            lines.append(f"         {c.anchor}")
        summary = self.summary
        lines.append(f"{summary['pass']} passed, {summary['fail']} failed")
        return "\n".join(lines)

    def __repr__(self):
        return f"<Report {self.suite} {self.summary}>"
