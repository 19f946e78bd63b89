"""Implication polynomials, the QCA <-> CQIA conversions, and homomorphisms."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InvalidCqia, InvalidQca, MalformedTable
from .lattice import FiniteOrtholattice, QuantumCylindricAlgebra, check_qca
from .qia import CylindricQia, QiaTable, check_cylindric_qia, derived_order, qia_comp, qia_join, qia_meet, unit_of
from .report import CheckReport, Collector


class ImplicationKind(enum.Enum):
    CLASSICAL = "classical"
    SASAKI = "sasaki"
    DISHKANT = "dishkant"
    KALMBACH = "kalmbach"


def implication(L: FiniteOrtholattice, kind: ImplicationKind | str, x: int, y: int) -> int:
    kind = ImplicationKind(kind)
    m, j, c = L.meet, L.join, L.ocomp
    if kind is ImplicationKind.CLASSICAL:
        return j[c[x]][y]
    if kind is ImplicationKind.SASAKI:
        return j[c[x]][m[x][y]]
    if kind is ImplicationKind.DISHKANT:
        return j[m[c[x]][c[y]]][y]
    return j[j[m[x][y]][m[c[x]][y]]][m[c[x]][c[y]]]


def implication_table(L: FiniteOrtholattice, kind: ImplicationKind | str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(implication(L, kind, x, y) for y in range(L.n)) for x in range(L.n))


def sasaki(L: FiniteOrtholattice, x: int, y: int) -> int:
    return implication(L, ImplicationKind.SASAKI, x, y)


def check_hardegree(L: FiniteOrtholattice, kind: ImplicationKind | str, exhaustive: bool = False) -> CheckReport:
    """Law of implication, modus ponens and modus tollens for ``kind``."""
    out = Collector(exhaustive)
    leq, m, c = L.leq, L.meet, L.ocomp
    t = implication_table(L, kind)
    for x in range(L.n):
        for y in range(L.n):
            if leq[x][y] and t[x][y] != L.top:
                out.fail("law-of-implication", (x, y))
            if not leq[m[x][t[x][y]]][y]:
                out.fail("modus-ponens", (x, y))
            if not leq[m[c[y]][t[x][y]]][c[x]]:
                out.fail("modus-tollens", (x, y))
    return out.report()


def check_useful_lemma(L: FiniteOrtholattice, exhaustive: bool = False) -> CheckReport:
    """sasaki(sasaki(x, y), x')' == x ∧ y on every pair."""
    out = Collector(exhaustive)
    c = L.ocomp
    for x in range(L.n):
        for y in range(L.n):
            if c[sasaki(L, sasaki(L, x, y), c[x])] != L.meet[x][y]:
                out.fail("useful-lemma", (x, y))
    return out.report()


def oml_to_qia(L: FiniteOrtholattice) -> QiaTable:
    """Bounded quasi-implication algebra (L, sasaki hook, 0)."""
    return QiaTable(L.n, implication_table(L, ImplicationKind.SASAKI), L.bot, L.labels)


def qca_to_cqia(A: QuantumCylindricAlgebra) -> CylindricQia:
    report = check_qca(A)
    if not report.passed:
        raise InvalidQca("input is not a quantum cylindric algebra: " + report.summary(), report)
    return CylindricQia(oml_to_qia(A.lattice), A.quantifiers, A.diag)


def qia_to_lattice(Q: QiaTable) -> FiniteOrtholattice:
    """The orthomodular lattice induced by a bounded quasi-implication algebra."""
    order = derived_order(Q)
    n = Q.n
    return FiniteOrtholattice(
        n=n,
        leq=order.leq,
        meet=tuple(tuple(qia_meet(Q, x, y) for y in range(n)) for x in range(n)),
        join=tuple(tuple(qia_join(Q, x, y) for y in range(n)) for x in range(n)),
        ocomp=tuple(qia_comp(Q, x) for x in range(n)),
        bot=Q.zero,
        top=unit_of(Q),
        labels=Q.labels,
    )


def cqia_to_qca(C: CylindricQia) -> QuantumCylindricAlgebra:
    report = check_cylindric_qia(C)
    if not report.passed:
        raise InvalidCqia("input is not a cylindric quasi-implication algebra: " + report.summary(), report)
    return QuantumCylindricAlgebra(qia_to_lattice(C.qia), C.diamonds, C.diag)


@dataclass(frozen=True)
class HomMap:
    source_n: int
    target_n: int
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source_n:
            raise MalformedTable(f"map: expected length {self.source_n}")
        for v in self.map:
            if not 0 <= v < self.target_n:
                raise MalformedTable(f"map: value {v} outside target of size {self.target_n}")

    @classmethod
    def of(cls, values: Sequence[int], target_n: int) -> HomMap:
        return cls(len(values), target_n, tuple(values))

    def __call__(self, x: int) -> int:
        return self.map[x]


def _sizes(h: HomMap, n: int, n2: int) -> None:
    if h.source_n != n or h.target_n != n2:
        raise MalformedTable(f"map is {h.source_n}->{h.target_n}, structures are {n}->{n2}")


def check_hom_qca(
    A: QuantumCylindricAlgebra, B: QuantumCylindricAlgebra, h: HomMap, exhaustive: bool = False
) -> CheckReport:
    if A.d != B.d:
        raise DimensionMismatch(f"{A.d} dimensions vs {B.d}")
    _sizes(h, A.n, B.n)
    out = Collector(exhaustive)
    L, M, f = A.lattice, B.lattice, h.map
    for x in range(L.n):
        for y in range(L.n):
            if f[L.meet[x][y]] != M.meet[f[x]][f[y]]:
                out.fail("1", (x, y))
            if f[L.join[x][y]] != M.join[f[x]][f[y]]:
                out.fail("2", (x, y))
    for x in range(L.n):
        if f[L.ocomp[x]] != M.ocomp[f[x]]:
            out.fail("3", (x,))
    if f[L.bot] != M.bot or f[L.top] != M.top:
        out.fail("4", ())
    for i in A.dims:
        for x in range(L.n):
            if f[A.quantifiers[i][x]] != B.quantifiers[i][f[x]]:
                out.fail("5", (x,), (i,))
    for i in A.dims:
        for k in A.dims:
            if f[A.diag[i][k]] != B.diag[i][k]:
                out.fail("6", (), (i, k))
    return out.report()


def check_hom_cqia(C: CylindricQia, D: CylindricQia, h: HomMap, exhaustive: bool = False) -> CheckReport:
    if C.d != D.d:
        raise DimensionMismatch(f"{C.d} dimensions vs {D.d}")
    _sizes(h, C.n, D.n)
    out = Collector(exhaustive)
    s, t, f = C.qia.dot, D.qia.dot, h.map
    for x in range(C.n):
        for y in range(C.n):
            if f[s[x][y]] != t[f[x]][f[y]]:
                out.fail("1", (x, y))
    for i in C.dims:
        for x in range(C.n):
            if f[C.diamonds[i][x]] != D.diamonds[i][f[x]]:
                out.fail("2", (x,), (i,))
    for i in C.dims:
        for k in C.dims:
            if f[C.diag[i][k]] != D.diag[i][k]:
                out.fail("3", (), (i, k))
    if f[C.zero] != D.zero:
        out.fail("4", ())
    return out.report()
