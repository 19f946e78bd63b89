"""Finite ortholattices, quantifiers and quantum cylindric algebras.

Elements are the integers ``0..n-1``. The order relation is the source of
truth: ``FiniteOrtholattice.from_order`` derives meet and join tables from it,
and the checkers revalidate every table against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InternalInconsistency, MalformedTable, NotOrtholattice
from .report import CheckReport, Collector

Table = tuple[tuple[int, ...], ...]
Relation = tuple[tuple[bool, ...], ...]


def _bits(members) -> int:
    out = 0
    for x in members:
        out |= 1 << x
    return out


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _square(rows, n: int, name: str) -> None:
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MalformedTable(f"{name}: expected a {n}x{n} table")


def _in_range(values, n: int, name: str) -> None:
    for v in values:
        if not isinstance(v, int) or not 0 <= v < n:
            raise MalformedTable(f"{name}: entry {v!r} out of range 0..{n - 1}")


@dataclass(frozen=True)
class FiniteOrtholattice:
    n: int
    leq: Relation
    meet: Table
    join: Table
    ocomp: tuple[int, ...]
    bot: int
    top: int
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_order(
        cls,
        leq: Sequence[Sequence[bool]],
        ocomp: Sequence[int],
        labels: Sequence[str] | None = None,
    ) -> FiniteOrtholattice:
        """Build a lattice from its order relation, deriving meet and join.

        Raises MalformedTable when ``leq`` is not a bounded lattice order.
        """
        n = len(leq)
        _square(leq, n, "leq")
        if len(ocomp) != n:
            raise MalformedTable(f"ocomp: expected length {n}")
        _in_range(ocomp, n, "ocomp")
        if labels is not None and len(labels) != n:
            raise MalformedTable(f"labels: expected length {n}")
        rel = tuple(tuple(bool(v) for v in row) for row in leq)
        down = [_bits(w for w in range(n) if rel[w][z]) for z in range(n)]
        up = [_bits(w for w in range(n) if rel[z][w]) for z in range(n)]
        full = (1 << n) - 1
        for x in range(n):
            if not rel[x][x]:
                raise MalformedTable(f"leq: not reflexive at {x}")
            for y in range(x + 1, n):
                if rel[x][y] and rel[y][x]:
                    raise MalformedTable(f"leq: not antisymmetric at ({x}, {y})")
            for y in range(n):
                if rel[x][y] and up[y] & ~up[x]:
                    raise MalformedTable(f"leq: not transitive at ({x}, {y}, {_lowest(up[y] & ~up[x])})")
        bots = [z for z in range(n) if up[z] == full]
        tops = [z for z in range(n) if down[z] == full]
        if not bots or not tops:
            raise MalformedTable("leq: lattice must have a least and a greatest element")
        by_down = {d: z for z, d in enumerate(down)}
        by_up = {u: z for z, u in enumerate(up)}
        meet, join = [], []
        for x in range(n):
            mrow, jrow = [], []
            for y in range(n):
                m = by_down.get(down[x] & down[y])
                j = by_up.get(up[x] & up[y])
                if m is None or j is None:
                    raise MalformedTable(f"leq: {{{x}, {y}}} has no {'meet' if m is None else 'join'}")
                mrow.append(m)
                jrow.append(j)
            meet.append(tuple(mrow))
            join.append(tuple(jrow))
        return cls(
            n=n,
            leq=rel,
            meet=tuple(meet),
            join=tuple(join),
            ocomp=tuple(ocomp),
            bot=bots[0],
            top=tops[0],
            labels=tuple(labels) if labels is not None else None,
        )

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index(self, label: str) -> int:
        """Element index for ``label`` (falls back to decimal indices)."""
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        return int(label)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Down-set of each element as a bitset."""
        return tuple(_bits(w for w in range(self.n) if self.leq[w][z]) for z in range(self.n))

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(_bits(w for w in range(self.n) if self.leq[z][w]) for z in range(self.n))

    def validate_shape(self) -> None:
        n = self.n
        _square(self.leq, n, "leq")
        _square(self.meet, n, "meet")
        _square(self.join, n, "join")
        for row in self.meet:
            _in_range(row, n, "meet")
        for row in self.join:
            _in_range(row, n, "join")
        if len(self.ocomp) != n:
            raise MalformedTable(f"ocomp: expected length {n}")
        _in_range(self.ocomp, n, "ocomp")
        _in_range((self.bot, self.top), n, "bounds")
        if self.labels is not None and len(self.labels) != n:
            raise MalformedTable(f"labels: expected length {n}")

    def is_distributive(self) -> bool:
        return distributivity_witness(self) is None


def distributivity_witness(L: FiniteOrtholattice) -> tuple[int, int, int] | None:
    """First (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), or None."""
    m, j = L.meet, L.join
    for x in range(L.n):
        for y in range(L.n):
            for z in range(L.n):
                if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
                    return (x, y, z)
    return None


def check_ortholattice(L: FiniteOrtholattice, exhaustive: bool = False) -> CheckReport:
    L.validate_shape()
    out = Collector(exhaustive)
    n, leq, meet, join, c = L.n, L.leq, L.meet, L.join, L.ocomp
    down, up = L.down, L.up

    for x in range(n):
        if not leq[x][x]:
            out.fail("reflexive", (x,))
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                out.fail("antisymmetric", (x, y))
    for x in range(n):
        for y in range(n):
            if out.done_with("transitive"):
                break
            if leq[x][y]:
                bad = up[y] & ~up[x]
                while bad:
                    out.fail("transitive", (x, y, _lowest(bad)))
                    bad &= bad - 1
                    if not out.exhaustive:
                        break
    for x in range(n):
        if not leq[L.bot][x]:
            out.fail("bot", (x,))
        if not leq[x][L.top]:
            out.fail("top", (x,))
    for x in range(n):
        for y in range(n):
            m = meet[x][y]
            if not (leq[m][x] and leq[m][y]) or (down[x] & down[y]) & ~down[m]:
                out.fail("meet", (x, y))
            j = join[x][y]
            if not (leq[x][j] and leq[y][j]) or (up[x] & up[y]) & ~up[j]:
                out.fail("join", (x, y))
    for x in range(n):
        if meet[x][c[x]] != L.bot or join[x][c[x]] != L.top:
            out.fail("2(a)", (x,))
    for x in range(n):
        for y in range(n):
            if leq[x][y] and not leq[c[y]][c[x]]:
                out.fail("2(b)", (x, y))
    for x in range(n):
        if c[c[x]] != x:
            out.fail("2(c)", (x,))
    return out.report()


def check_orthomodular(L: FiniteOrtholattice, exhaustive: bool = False) -> CheckReport:
    """Orthomodularity, evaluated twice.

    ``oml`` is the quasi-equation x<=y => y = x∨(x'∧y); ``oml-eq`` is the
    equational form x∨y = x∨(x'∧(x∨y)). The two are equivalent on
    ortholattices, so differing verdicts raise InternalInconsistency.
    """
    base = check_ortholattice(L)
    if not base.passed:
        raise NotOrtholattice("not an ortholattice: " + base.summary(), base)
    out = Collector(exhaustive)
    n, leq, meet, join, c = L.n, L.leq, L.meet, L.join, L.ocomp
    for x in range(n):
        for y in range(n):
            if leq[x][y] and join[x][meet[c[x]][y]] != y:
                out.fail("oml", (x, y))
            xy = join[x][y]
            if xy != join[x][meet[c[x]][xy]]:
                out.fail("oml-eq", (x, y))
    report = out.report()
    axioms = set(report.axioms())
    if ("oml" in axioms) != ("oml-eq" in axioms):
        raise InternalInconsistency("orthomodularity formulations disagree", report)
    return report


def check_quantifier(L: FiniteOrtholattice, q: Sequence[int], exhaustive: bool = False) -> CheckReport:
    if len(q) != L.n:
        raise MalformedTable(f"quantifier: expected length {L.n}")
    _in_range(q, L.n, "quantifier")
    out = Collector(exhaustive)
    n, leq, join, c = L.n, L.leq, L.join, L.ocomp
    if q[L.bot] != L.bot:
        out.fail("2(a)", ())
    for x in range(n):
        if not leq[x][q[x]]:
            out.fail("2(b)", (x,))
    for x in range(n):
        for y in range(n):
            if q[join[x][y]] != join[q[x]][q[y]]:
                out.fail("2(c)", (x, y))
    for x in range(n):
        if q[q[x]] != q[x]:
            out.fail("2(d)", (x,))
    for x in range(n):
        if q[c[q[x]]] != c[q[x]]:
            out.fail("2(e)", (x,))
    return out.report()


@dataclass(frozen=True)
class QuantumCylindricAlgebra:
    """An orthomodular lattice with quantifiers ``quantifiers[i]`` (one per
    dimension ``i`` in ``0..d-1``) and diagonal elements ``diag[i][k]``."""

    lattice: FiniteOrtholattice
    quantifiers: Table
    diag: Table

    @property
    def d(self) -> int:
        return len(self.quantifiers)

    @property
    def dims(self) -> range:
        return range(self.d)

    @property
    def n(self) -> int:
        return self.lattice.n

    def validate_shape(self) -> None:
        self.lattice.validate_shape()
        n, d = self.n, self.d
        for q in self.quantifiers:
            if len(q) != n:
                raise MalformedTable(f"quantifier: expected length {n}")
            _in_range(q, n, "quantifier")
        _square(self.diag, d, "diag")
        for row in self.diag:
            _in_range(row, n, "diag")


def check_qca(A: QuantumCylindricAlgebra, exhaustive: bool = False) -> CheckReport:
    A.validate_shape()
    L = A.lattice
    out = Collector(exhaustive)
    base = check_ortholattice(L, exhaustive)
    out.extend(base)
    if base.passed:
        out.extend(check_orthomodular(L, exhaustive))
    for i, q in enumerate(A.quantifiers):
        out.extend(check_quantifier(L, q, exhaustive), prefix=f"exists[{i}].")

    qs, diag, meet = A.quantifiers, A.diag, L.meet
    for i in A.dims:
        for k in range(i + 1, A.d):
            for x in range(L.n):
                if qs[i][qs[k][x]] != qs[k][qs[i][x]]:
                    out.fail("3", (x,), (i, k))
    for i in A.dims:
        for k in A.dims:
            if diag[i][k] != diag[k][i] or (i == k and diag[i][i] != L.top):
                out.fail("4(a)", (), (i, k))
    for i in A.dims:
        for k in A.dims:
            for l in A.dims:
                if i == k or l == k:
                    continue
                if qs[k][meet[diag[i][k]][diag[k][l]]] != diag[i][l]:
                    out.fail("4(b)", (), (i, k, l))
    return out.report()
