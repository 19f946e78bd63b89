"""Quasi-implication algebras as dot-tables.

A ``QiaTable`` is a finite magma ``dot[x][y] = x·y``, optionally bounded by
a ``zero`` with ``0·x = 1``. The unit, the order, and the lattice operations
are all recovered from the table alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import (
    MalformedTable,
    NotConstant,
    OrderLawViolation,
    PreconditionFailed,
    TheoremViolation,
    Unbounded,
)
from .lattice import Relation, Table, _in_range, _square
from .report import CheckReport, Collector


@dataclass(frozen=True)
class QiaTable:
    n: int
    dot: Table
    zero: int | None = None
    labels: tuple[str, ...] | None = None

    def validate_shape(self) -> None:
        _square(self.dot, self.n, "dot")
        for row in self.dot:
            _in_range(row, self.n, "dot")
        if self.zero is not None:
            _in_range((self.zero,), self.n, "zero")
        if self.labels is not None and len(self.labels) != self.n:
            raise MalformedTable(f"labels: expected length {self.n}")

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def unit(self) -> int:
        return unit_of(self)

    def comp(self, x: int) -> int:
        return qia_comp(self, x)

    def meet(self, x: int, y: int) -> int:
        return qia_meet(self, x, y)

    def join(self, x: int, y: int) -> int:
        return qia_join(self, x, y)


@dataclass(frozen=True)
class CylindricQia:
    qia: QiaTable
    diamonds: Table
    diag: Table

    @property
    def d(self) -> int:
        return len(self.diamonds)

    @property
    def dims(self) -> range:
        return range(self.d)

    @property
    def n(self) -> int:
        return self.qia.n

    @property
    def zero(self) -> int:
        if self.qia.zero is None:
            raise Unbounded("cylindric quasi-implication algebra without zero")
        return self.qia.zero

    def validate_shape(self) -> None:
        self.qia.validate_shape()
        for dm in self.diamonds:
            if len(dm) != self.n:
                raise MalformedTable(f"diamond: expected length {self.n}")
            _in_range(dm, self.n, "diamond")
        _square(self.diag, self.d, "diag")
        for row in self.diag:
            _in_range(row, self.n, "diag")


@dataclass(frozen=True)
class DerivedOrder:
    leq: Relation


def check_qia(Q: QiaTable, exhaustive: bool = False) -> CheckReport:
    """The three quasi-implication axioms, plus ``bottom`` (0·x = x·x) when
    the table declares a zero."""
    Q.validate_shape()
    out = Collector(exhaustive)
    n, t = Q.n, Q.dot
    for x in range(n):
        for y in range(n):
            if t[t[x][y]][x] != x:
                out.fail("1", (x, y))
    for x in range(n):
        for y in range(n):
            if out.done_with("2"):
                break
            xy, yx = t[x][y], t[y][x]
            for z in range(n):
                if t[xy][t[x][z]] != t[yx][t[y][z]]:
                    out.fail("2", (x, y, z))
    for x in range(n):
        for y in range(n):
            xy, yx = t[x][y], t[y][x]
            if t[t[xy][yx]][x] != t[t[yx][xy]][y]:
                out.fail("3", (x, y))
    if Q.zero is not None:
        for x in range(n):
            if t[Q.zero][x] != t[x][x]:
                out.fail("bottom", (x,))
    return out.report()


def check_derived_identities(Q: QiaTable, exhaustive: bool = False) -> CheckReport:
    """Consequences of the axioms: the four items of Hardegree's lemma, the
    unit laws 1·x = x and x·1 = 1, and left monotonicity.

    These are theorems, so a failure on a table that passes ``check_qia``
    raises TheoremViolation rather than returning a failed report.
    """
    base = check_qia(Q)
    if not base.passed:
        raise PreconditionFailed("table is not a quasi-implication algebra", base)
    out = Collector(exhaustive)
    n, t = Q.n, Q.dot
    one = unit_of(Q)
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if t[x][xy] != xy:
                out.fail("lemma.1", (x, y))
            if t[x][x] != t[xy][xy]:
                out.fail("lemma.2", (x, y))
            if t[x][x] != t[y][y]:
                out.fail("lemma.3", (x, y))
            for z in range(n):
                if t[xy][t[x][z]] != t[x][t[xy][z]]:
                    out.fail("lemma.4", (x, y, z))
                if t[y][z] == one and t[xy][t[x][z]] != one:
                    out.fail("left-monotone", (x, y, z))
    for x in range(n):
        if t[one][x] != x:
            out.fail("unit-left", (x,))
        if t[x][one] != one:
            out.fail("unit-right", (x,))
    report = out.report()
    if not report.passed:
        raise TheoremViolation("derived identity failed on a valid table", report)
    return report


def unit_of(Q: QiaTable) -> int:
    values = {Q.dot[x][x] for x in range(Q.n)}
    if len(values) != 1:
        raise NotConstant(f"x·x takes {len(values)} distinct values")
    return values.pop()


def derived_order(Q: QiaTable) -> DerivedOrder:
    """x ⪯ y iff x·y = 1, with the partial order laws asserted."""
    n, one = Q.n, unit_of(Q)
    leq = tuple(tuple(Q.dot[x][y] == one for y in range(n)) for x in range(n))
    for x in range(n):
        if not leq[x][x]:
            raise OrderLawViolation(f"not reflexive at {x}")
        if not leq[x][one]:
            raise OrderLawViolation(f"unit is not above {x}")
        if Q.zero is not None and not leq[Q.zero][x]:
            raise OrderLawViolation(f"zero is not below {x}")
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise OrderLawViolation(f"not antisymmetric at ({x}, {y})")
            if leq[x][y]:
                for z in range(n):
                    if leq[y][z] and not leq[x][z]:
                        raise OrderLawViolation(f"not transitive at ({x}, {y}, {z})")
    return DerivedOrder(leq)


def _zero(Q: QiaTable) -> int:
    if Q.zero is None:
        raise Unbounded("operation needs a bounded quasi-implication algebra")
    return Q.zero


def qia_comp(Q: QiaTable, x: int) -> int:
    return Q.dot[x][_zero(Q)]


def qia_join(Q: QiaTable, x: int, y: int) -> int:
    t = Q.dot
    return t[t[t[x][y]][t[y][x]]][x]


def qia_meet(Q: QiaTable, x: int, y: int) -> int:
    """((x·y)·(x·0))·0"""
    t, z = Q.dot, _zero(Q)
    return t[t[t[x][y]][t[x][z]]][z]


def qia_meet_long(Q: QiaTable, x: int, y: int) -> int:
    """The complement of the join of x·0 and y·0:
    (((((x·0)·(y·0))·((y·0)·(x·0)))·(x·0))·0)."""
    t, z = Q.dot, _zero(Q)
    xc, yc = t[x][z], t[y][z]
    return t[t[t[t[xc][yc]][t[yc][xc]]][xc]][z]


def additivity_term(Q: QiaTable, x: int, y: int) -> int:
    """((x·0)·(y·0))·x, the argument of the diamond in monadic axiom 2(c)."""
    t, z = Q.dot, _zero(Q)
    return t[t[t[x][z]][t[y][z]]][x]


def check_monadic_qia(Q: QiaTable, diamond: Sequence[int], exhaustive: bool = False) -> CheckReport:
    """Monadic axioms 2(a)-2(c) as written, then idempotence and monotonicity
    of the diamond as derived checks (``derived.idempotent``,
    ``derived.monotone``)."""
    _zero(Q)
    if len(diamond) != Q.n:
        raise MalformedTable(f"diamond: expected length {Q.n}")
    _in_range(diamond, Q.n, "diamond")
    base = check_qia(Q)
    if not base.passed:
        raise PreconditionFailed("table is not a bounded quasi-implication algebra", base)
    return _monadic_report(Q, diamond, exhaustive)


def _monadic_report(Q: QiaTable, dm: Sequence[int], exhaustive: bool) -> CheckReport:
    out = Collector(exhaustive)
    n, t, zero, one = Q.n, Q.dot, Q.zero, unit_of(Q)
    for x in range(n):
        if t[dm[dm[x]]][dm[x]] != one or t[x][dm[x]] != one:
            out.fail("2(a)", (x,))
    if dm[zero] != zero:
        out.fail("2(b)", ())
    for x in range(n):
        c = t[dm[x]][zero]
        if dm[c] != c:
            out.fail("2(b)", (x,))
    for x in range(n):
        for y in range(n):
            rhs = t[t[t[dm[x]][zero]][t[dm[y]][zero]]][dm[x]]
            if dm[additivity_term(Q, x, y)] != rhs:
                out.fail("2(c)", (x, y))
    axioms_ok = not out.report().violations
    for x in range(n):
        if dm[dm[x]] != dm[x]:
            out.fail("derived.idempotent", (x,))
        for y in range(n):
            if t[x][y] == one and t[dm[x]][dm[y]] != one:
                out.fail("derived.monotone", (x, y))
    report = out.report()
    if axioms_ok and not report.passed:
        raise TheoremViolation("diamond satisfies the axioms but not their consequences", report)
    return report


def check_cylindric_qia(C: CylindricQia, exhaustive: bool = False) -> CheckReport:
    C.validate_shape()
    out = Collector(exhaustive)
    Q = C.qia
    base = check_qia(Q, exhaustive)
    out.extend(base)
    if Q.zero is None:
        out.fail("bounded", ())
    if not out.report().passed:
        return out.report()
    t, zero, one = Q.dot, Q.zero, unit_of(Q)
    for i, dm in enumerate(C.diamonds):
        out.extend(_monadic_report(Q, dm, exhaustive), prefix=f"diamond[{i}].")
    ds, dg = C.diamonds, C.diag
    for i in C.dims:
        for k in range(i + 1, C.d):
            for x in range(Q.n):
                if ds[i][ds[k][x]] != ds[k][ds[i][x]]:
                    out.fail("2", (x,), (i, k))
    for i in C.dims:
        for k in C.dims:
            if dg[i][k] != dg[k][i] or (i == k and dg[i][i] != one):
                out.fail("3", (), (i, k))
    for i in C.dims:
        for k in C.dims:
            for l in C.dims:
                if i == k or l == k:
                    continue
                a, b = dg[i][k], dg[k][l]
                if ds[k][t[t[t[a][b]][t[a][zero]]][zero]] != dg[i][l]:
                    out.fail("4", (), (i, k, l))
    return out.report()
