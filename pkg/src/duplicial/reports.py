"""Pass/fail reports shared by the axiom checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    title: str
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None):
        self.items.append(CheckItem(name, bool(passed), None if passed else witness))

    def add_equality(self, name: str, lhs, rhs):
        """Record an exact matrix identity, witnessing the first differing basis vector."""
        ok = lhs == rhs
        witness = None if ok else lhs.first_mismatch(rhs)
        self.items.append(CheckItem(name, ok, witness))

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def extend(self, other: "Report"):
        self.items.extend(other.items)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [item.to_dict() for item in self.items],
        }

    def __str__(self):
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.title}"]
        for item in self.items:
            mark = "ok  " if item.passed else "FAIL"
            extra = f"  (witness: {item.witness})" if item.witness else ""
            lines.append(f"  {mark} {item.name}{extra}")
        return "\n".join(lines)
