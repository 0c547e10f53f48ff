"""Suite reports and the tab-separated record format."""

from __future__ import annotations

from dataclasses import dataclass, field


def _clean(value) -> str:
    return str(value).replace("\t", " ").replace("\n", " / ")


def record_line(**fields) -> str:
    return "\t".join(f"{k}={_clean(v)}" for k, v in fields.items())


@dataclass
class SuiteReport:
    suite: str
    population: int
    passed: int = 0
    failed: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, ok: bool, item: str, **detail):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(item if not detail else f"{item} [{record_line(**detail)}]")
        self.records.append({"ok": int(ok), "item": item, **detail})

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        lines = [
            f"suite {self.suite}: {'PASS' if self.ok else 'FAIL'}",
            f"  population  {self.population}",
            f"  checks      {self.passed} passed, {self.failed} failed",
            f"  wall time   {self.wall_time:.2f}s",
        ]
        lines += [f"  note        {n}" for n in self.notes]
        lines += [f"  counterexample {c}" for c in self.counterexamples]
        return "\n".join(lines) + "\n"

    def to_records(self) -> str:
        """One header record, then one record per check.  Timing is left out
        so that identical runs give identical bytes."""
        out = [
            record_line(
                record="suite",
                suite=self.suite,
                population=self.population,
                passed=self.passed,
                failed=self.failed,
            )
        ]
        out += [record_line(record="check", suite=self.suite, **r) for r in self.records]
        return "\n".join(out) + "\n"
