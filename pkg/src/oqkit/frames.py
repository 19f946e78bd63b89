"""Cylindric orthoframes and the two frame constructions over a cylindric
quasi-implication algebra.

The MacLaren frame lives on the non-zero elements; the Goldblatt frame on the
proper filters. Frame points are indices ``0..m-1`` into the carrier, and
subsets of the carrier are frozensets of point indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyGenerator, InvalidCqia, MalformedTable, TooLarge, ZeroGenerator
from .limits import MAX_FILTERS, MAX_FRAME_SOURCE, ensure_size
from .qia import CylindricQia, check_cylindric_qia, qia_meet, unit_of
from .report import CheckReport, Collector


@dataclass(frozen=True)
class CylindricOrthoFrame:
    m: int
    perp: tuple[tuple[bool, ...], ...]
    rels: tuple[tuple[tuple[bool, ...], ...], ...]
    deltas: tuple[tuple[frozenset[int], ...], ...]
    labels: tuple[str, ...] | None = None

    @property
    def d(self) -> int:
        return len(self.rels)

    @property
    def dims(self) -> range:
        return range(self.d)

    @property
    def carrier(self) -> frozenset[int]:
        return frozenset(range(self.m))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def validate_shape(self) -> None:
        m, d = self.m, self.d
        for name, rel in [("perp", self.perp)] + [(f"rels[{i}]", r) for i, r in enumerate(self.rels)]:
            if len(rel) != m or any(len(row) != m for row in rel):
                raise MalformedTable(f"{name}: expected a {m}x{m} relation")
        if len(self.deltas) != d or any(len(row) != d for row in self.deltas):
            raise MalformedTable(f"deltas: expected a {d}x{d} array")
        for row in self.deltas:
            for s in row:
                if any(not 0 <= p < m for p in s):
                    raise MalformedTable("deltas: point out of range")
        if self.labels is not None and len(self.labels) != m:
            raise MalformedTable(f"labels: expected length {m}")

    def image(self, i: int, points: Iterable[int]) -> frozenset[int]:
        """R_i[U]"""
        rel = self.rels[i]
        return frozenset(y for x in points for y in range(self.m) if rel[x][y])


def perp_set(F: CylindricOrthoFrame, U: Iterable[int]) -> frozenset[int]:
    U = list(U)
    return frozenset(x for x in range(F.m) if all(F.perp[x][y] for y in U))


def check_orthoframe(F: CylindricOrthoFrame, exhaustive: bool = False) -> CheckReport:
    F.validate_shape()
    out = Collector(exhaustive)
    for x in range(F.m):
        if F.perp[x][x]:
            out.fail("irreflexive", (x,))
    for x in range(F.m):
        for y in range(F.m):
            if F.perp[x][y] and not F.perp[y][x]:
                out.fail("symmetric", (x, y))
    return out.report()


def check_monadic_orthoframe(F: CylindricOrthoFrame, i: int = 0, exhaustive: bool = False) -> CheckReport:
    """Orthoframe laws plus, for R = R_i: reflexive, transitive, the
    inclusion R[R[{x}]']  ⊆ R[{x}]' (``mof-3``) and the equality that
    reflexivity upgrades it to (``mof-eq``)."""
    out = Collector(exhaustive)
    out.extend(check_orthoframe(F, exhaustive))
    rel, m = F.rels[i], F.m
    for x in range(m):
        if not rel[x][x]:
            out.fail("reflexive", (x,))
    for x in range(m):
        for y in range(m):
            if not rel[x][y] or out.done_with("transitive"):
                continue
            for z in range(m):
                if rel[y][z] and not rel[x][z]:
                    out.fail("transitive", (x, y, z))
    for x in range(m):
        orth = perp_set(F, F.image(i, [x]))
        back = F.image(i, orth)
        for z in sorted(back - orth):
            out.fail("mof-3", (x, z))
        for z in sorted(back ^ orth):
            out.fail("mof-eq", (x, z))
    return out.report()


def check_cylindric_orthoframe(F: CylindricOrthoFrame, exhaustive: bool = False) -> CheckReport:
    F.validate_shape()
    out = Collector(exhaustive)
    if F.d == 0:
        out.extend(check_orthoframe(F, exhaustive))
    for i in F.dims:
        out.extend(check_monadic_orthoframe(F, i, exhaustive), prefix=f"R[{i}].")
    m = F.m
    for i in F.dims:
        for k in range(i + 1, F.d):
            for x in range(m):
                ik = F.image(k, F.image(i, [x]))
                ki = F.image(i, F.image(k, [x]))
                for z in sorted(ik ^ ki):
                    out.fail("2", (x, z), (i, k))
    full = F.carrier
    for i in F.dims:
        for k in F.dims:
            delta = F.deltas[i][k]
            if delta != F.deltas[k][i]:
                out.fail("3.symmetric", (), (i, k))
            closure = perp_set(F, perp_set(F, delta))
            for p in sorted(closure ^ delta):
                out.fail("3.closed", (p,), (i, k))
            if i == k:
                for p in sorted(full - delta):
                    out.fail("3.full", (p,), (i, i))
    for i in F.dims:
        for k in F.dims:
            for l in F.dims:
                if i == k or l == k:
                    continue
                lhs = F.image(k, F.deltas[i][k] & F.deltas[k][l])
                for p in sorted(lhs ^ F.deltas[i][l]):
                    out.fail("4", (p,), (i, k, l))
    return out.report()


def _require_cqia(C: CylindricQia, cap: int | None) -> None:
    ensure_size(C.n, "frame source algebra", MAX_FRAME_SOURCE, cap)
    report = check_cylindric_qia(C)
    if not report.passed:
        raise InvalidCqia("not a cylindric quasi-implication algebra: " + report.summary(), report)


def psi(C: CylindricQia, x: int) -> frozenset[int]:
    """Non-zero elements y with y·x = 1 (as algebra elements)."""
    t, one, zero = C.qia.dot, unit_of(C.qia), C.zero
    return frozenset(y for y in range(C.n) if y != zero and t[y][x] == one)


def maclaren_frame(C: CylindricQia, max_source: int | None = None) -> CylindricOrthoFrame:
    """Frame on the non-zero elements of ``C`` in index order.

    x ⊥ y iff x·(y·0) = 1; x R_i y iff y·◇_i x = 1; Δ_ik = psi(d_ik).
    """
    _require_cqia(C, max_source)
    t, one, zero = C.qia.dot, unit_of(C.qia), C.zero
    points = [x for x in range(C.n) if x != zero]
    where = {x: p for p, x in enumerate(points)}
    perp = tuple(tuple(t[x][t[y][zero]] == one for y in points) for x in points)
    rels = tuple(
        tuple(tuple(t[y][dm[x]] == one for y in points) for x in points) for dm in C.diamonds
    )
    deltas = tuple(
        tuple(frozenset(where[y] for y in psi(C, C.diag[i][k])) for k in C.dims) for i in C.dims
    )
    return CylindricOrthoFrame(len(points), perp, rels, deltas, tuple(C.qia.label(x) for x in points))


def _bits(members: Iterable[int]) -> int:
    out = 0
    for x in members:
        out |= 1 << x
    return out


def _members(bits: int) -> frozenset[int]:
    out, j = [], 0
    while bits:
        if bits & 1:
            out.append(j)
        bits >>= 1
        j += 1
    return frozenset(out)


class _FilterOps:
    """Bitset closure machinery for filters of a bounded QIA."""

    def __init__(self, C: CylindricQia):
        self.C = C
        Q = C.qia
        self.n, self.zero, one = C.n, C.zero, unit_of(Q)
        self.up = [_bits(y for y in range(self.n) if Q.dot[x][y] == one) for x in range(self.n)]
        self.meet = [[qia_meet(Q, x, y) for y in range(self.n)] for x in range(self.n)]

    def is_filter(self, s: int) -> bool:
        if not s:
            return False
        members = _members(s)
        for x in members:
            if self.up[x] & ~s:
                return False
            for y in members:
                if not s >> self.meet[x][y] & 1:
                    return False
        return True

    def close(self, s: int) -> int:
        """Least subset containing ``s`` closed under both filter conditions."""
        while True:
            grown = s
            members = _members(s)
            for x in members:
                grown |= self.up[x]
                for y in members:
                    grown |= 1 << self.meet[x][y]
            if grown == s:
                return s
            s = grown


def principal_filter(C: CylindricQia, x: int) -> frozenset[int]:
    """↑x = {y : x·y = 1}."""
    if x == C.zero:
        raise ZeroGenerator("the principal filter of zero is improper")
    one = unit_of(C.qia)
    return frozenset(y for y in range(C.n) if C.qia.dot[x][y] == one)


def filter_generated(C: CylindricQia, S: Iterable[int]) -> frozenset[int] | None:
    """Least filter containing ``S``, or None when that filter is improper."""
    s = _bits(S)
    if not s:
        raise EmptyGenerator("cannot generate a filter from the empty set")
    closed = _FilterOps(C).close(s)
    if closed >> C.zero & 1:
        return None
    return _members(closed)


def filter_key(f: Iterable[int]) -> int:
    """Canonical sort key: the membership bitmask read as an integer."""
    return _bits(f)


def is_filter(C: CylindricQia, S: Iterable[int]) -> bool:
    return _FilterOps(C).is_filter(_bits(S))


def enumerate_proper_filters(
    C: CylindricQia, max_source: int | None = None, max_filters: int = MAX_FILTERS
) -> list[frozenset[int]]:
    """All proper filters, ordered by ``filter_key``.

    Search by closure: every filter is reached from a smaller one by adding
    one element and closing, starting from the single-generator filters.
    """
    ensure_size(C.n, "filter enumeration source", MAX_FRAME_SOURCE, max_source)
    ops = _FilterOps(C)
    zero_bit = 1 << C.zero
    found: set[int] = set()
    frontier = []
    for x in range(C.n):
        s = ops.close(1 << x)
        if not s & zero_bit and s not in found:
            found.add(s)
            frontier.append(s)
    while frontier:
        nxt = []
        for s in frontier:
            for y in range(C.n):
                if s >> y & 1:
                    continue
                t = ops.close(s | 1 << y)
                if t & zero_bit or t in found:
                    continue
                found.add(t)
                nxt.append(t)
                if len(found) > max_filters:
                    raise TooLarge(f"more than {max_filters} proper filters")
        frontier = nxt
    return [_members(s) for s in sorted(found)]


def phi(filters: list[frozenset[int]], x: int) -> frozenset[int]:
    """Indices of the filters containing ``x``."""
    return frozenset(p for p, f in enumerate(filters) if x in f)


def _filter_label(C: CylindricQia, f: frozenset[int]) -> str:
    return "{" + ",".join(C.qia.label(x) for x in sorted(f)) + "}"


def goldblatt_frame(
    C: CylindricQia, max_source: int | None = None, max_filters: int = MAX_FILTERS
) -> CylindricOrthoFrame:
    """Frame on the proper filters of ``C``.

    α ⊥ β iff some x in α has x·0 in β; α R_i β iff ◇_i[α] ⊆ β;
    Δ_ik = phi(d_ik).
    """
    _require_cqia(C, max_source)
    filters = enumerate_proper_filters(C, max_source, max_filters)
    t, zero = C.qia.dot, C.zero
    comps = [frozenset(t[x][zero] for x in f) for f in filters]
    perp = tuple(tuple(bool(ca & b) for b in filters) for ca in comps)
    rels = tuple(
        tuple(tuple(frozenset(dm[x] for x in a) <= b for b in filters) for a in filters)
        for dm in C.diamonds
    )
    deltas = tuple(tuple(phi(filters, C.diag[i][k]) for k in C.dims) for i in C.dims)
    labels = tuple(_filter_label(C, f) for f in filters)
    return CylindricOrthoFrame(len(filters), perp, rels, deltas, labels)


def check_psi_lemma(C: CylindricQia, exhaustive: bool = False) -> CheckReport:
    """psi(x) ∩ psi(y) = psi(x ∧ y) and psi(x·0) = psi(x)' in the MacLaren
    frame, plus the symmetry and unit laws of its diagonals."""
    F = maclaren_frame(C)
    zero = C.zero
    points = [x for x in range(C.n) if x != zero]
    where = {x: p for p, x in enumerate(points)}

    def pts(elems: frozenset[int]) -> frozenset[int]:
        return frozenset(where[y] for y in elems)

    out = Collector(exhaustive)
    ps = [psi(C, x) for x in range(C.n)]
    for x in range(C.n):
        for y in range(C.n):
            if ps[x] & ps[y] != ps[qia_meet(C.qia, x, y)]:
                out.fail("psi-meet", (x, y))
    for x in range(C.n):
        if pts(ps[C.qia.dot[x][zero]]) != perp_set(F, pts(ps[x])):
            out.fail("psi-perp", (x,))
    _delta_laws(F, out)
    return out.report()


def check_phi_lemma(C: CylindricQia, exhaustive: bool = False) -> CheckReport:
    """The same two identities for phi and the Goldblatt perp."""
    F = goldblatt_frame(C)
    filters = enumerate_proper_filters(C)
    out = Collector(exhaustive)
    ph = [phi(filters, x) for x in range(C.n)]
    for x in range(C.n):
        for y in range(C.n):
            if ph[x] & ph[y] != ph[qia_meet(C.qia, x, y)]:
                out.fail("phi-meet", (x, y))
    for x in range(C.n):
        if ph[C.qia.dot[x][C.zero]] != perp_set(F, ph[x]):
            out.fail("phi-perp", (x,))
    _delta_laws(F, out)
    return out.report()


def _delta_laws(F: CylindricOrthoFrame, out: Collector) -> None:
    for i in F.dims:
        for k in F.dims:
            if F.deltas[i][k] != F.deltas[k][i]:
                out.fail("delta-symmetric", (), (i, k))
        if F.deltas[i][i] != F.carrier:
            out.fail("delta-full", (), (i,))


def check_canonical_iso(C: CylindricQia, exhaustive: bool = False) -> CheckReport:
    """x ↦ ↑x from the MacLaren carrier onto the Goldblatt carrier is a
    bijection preserving ⊥, every R_i and every Δ_ik.

    Witnesses are MacLaren point indices.
    """
    M, G = maclaren_frame(C), goldblatt_frame(C)
    filters = enumerate_proper_filters(C)
    where = {f: p for p, f in enumerate(filters)}
    points = [x for x in range(C.n) if x != C.zero]
    out = Collector(exhaustive)
    image = []
    for p, x in enumerate(points):
        q = where.get(principal_filter(C, x))
        if q is None:
            out.fail("onto-filters", (p,))
        image.append(q)
    hit = {q for q in image if q is not None}
    if len(hit) != len(points):
        out.fail("injective", ())
    if len(filters) != len(points) or hit != set(range(len(filters))):
        out.fail("surjective", ())
    if not out.report().passed:
        return out.report()
    for p in range(M.m):
        for r in range(M.m):
            if M.perp[p][r] != G.perp[image[p]][image[r]]:
                out.fail("perp", (p, r))
    for i in M.dims:
        for p in range(M.m):
            for r in range(M.m):
                if M.rels[i][p][r] != G.rels[i][image[p]][image[r]]:
                    out.fail("R", (p, r), (i,))
    for i in M.dims:
        for k in M.dims:
            if frozenset(image[p] for p in M.deltas[i][k]) != G.deltas[i][k]:
                out.fail("delta", (), (i, k))
    return out.report()
