from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Violation:
    """One failed law instance.

    ``witness`` holds carrier elements (algebra elements or frame points);
    ``dims`` holds dimension indices when the law is quantified over them.
    """

    axiom: str
    witness: tuple[int, ...] = ()
    dims: tuple[int, ...] = ()

    def prefixed(self, prefix: str) -> Violation:
        return Violation(prefix + self.axiom, self.witness, self.dims)


@dataclass(frozen=True)
class CheckReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def axioms(self) -> list[str]:
        seen: dict[str, None] = {}
        for v in self.violations:
            seen.setdefault(v.axiom)
        return list(seen)

    def first(self, axiom: str) -> Violation | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def witnesses(self, axiom: str) -> list[tuple[int, ...]]:
        return [v.witness for v in self.violations if v.axiom == axiom]

    def merged(self, *others: CheckReport, prefix: str = "") -> CheckReport:
        extra = [v.prefixed(prefix) for o in others for v in o.violations]
        return CheckReport(self.violations + tuple(extra))

    def summary(self) -> str:
        if self.passed:
            return "passed"
        return "failed: " + ", ".join(self.axioms())


@dataclass
class Collector:
    """Accumulates violations while a checker runs.

    Unless ``exhaustive`` is set, only the first violation of each axiom is
    kept. Checkers iterate witness tuples in lexicographic order, so the kept
    one is the lexicographically smallest.
    """

    exhaustive: bool = False
    _out: list[Violation] = field(default_factory=list)
    _seen: set[str] = field(default_factory=set)

    def done_with(self, axiom: str) -> bool:
        return not self.exhaustive and axiom in self._seen

    def fail(self, axiom: str, witness: Iterable[int] = (), dims: Iterable[int] = ()) -> None:
        if self.done_with(axiom):
            return
        self._seen.add(axiom)
        self._out.append(Violation(axiom, tuple(witness), tuple(dims)))

    def extend(self, report: CheckReport, prefix: str = "") -> None:
        for v in report.violations:
            self._seen.add(prefix + v.axiom)
            self._out.append(v.prefixed(prefix))

    def report(self) -> CheckReport:
        return CheckReport(tuple(self._out))
