"""Known finite instances: Boolean algebras, MO_m, O6, cylindric set
algebras, simple-quantifier algebras and direct products."""

from __future__ import annotations

import itertools
import string

from .errors import DimensionMismatch, NotOrtholattice, NotOrthomodular, TooLarge
from .lattice import (
    FiniteOrtholattice,
    QuantumCylindricAlgebra,
    check_orthomodular,
)
from .limits import MAX_ELEMS, ensure_size


def _powerset_lattice(k: int, labels) -> FiniteOrtholattice:
    """Lattice of subsets of a k-set, elements encoded as bitmasks."""
    n = 1 << k
    full = n - 1
    return FiniteOrtholattice(
        n=n,
        leq=tuple(tuple(x & ~y == 0 for y in range(n)) for x in range(n)),
        meet=tuple(tuple(x & y for y in range(n)) for x in range(n)),
        join=tuple(tuple(x | y for y in range(n)) for x in range(n)),
        ocomp=tuple(full ^ x for x in range(n)),
        bot=0,
        top=full,
        labels=tuple(labels),
    )


def boolean_algebra(k: int, max_elems: int | None = None) -> FiniteOrtholattice:
    """Powerset of a k-set. Element ``x`` is the subset with bitmask ``x``;
    atoms are labelled a, b, c, ... and the bounds 0 and 1."""
    if k < 0:
        raise ValueError("atom count must be non-negative")
    if k > 60:
        raise TooLarge(f"2^{k} elements")
    ensure_size(1 << k, f"boolean_algebra({k})", MAX_ELEMS, max_elems)
    full = (1 << k) - 1
    names = string.ascii_lowercase if k <= 26 else None

    def label(x: int) -> str:
        if x == 0:
            return "0"
        if x == full:
            return "1"
        atoms = [j for j in range(k) if x >> j & 1]
        if names:
            return "".join(names[j] for j in atoms)
        return "+".join(f"a{j}" for j in atoms)

    return _powerset_lattice(k, [label(x) for x in range(1 << k)])


def mo(m: int) -> FiniteOrtholattice:
    """The lantern MO_m: 0 < a_j, a_j' < 1 with m complementary pairs.

    Indices: 0 is bottom, a_j is ``2j+1``, a_j' is ``2j+2``, top is ``2m+1``.
    """
    if m < 1:
        raise ValueError("mo(m) needs m >= 1")
    n = 2 * m + 2
    top = n - 1
    leq = [[x == y or x == 0 or y == top for y in range(n)] for x in range(n)]
    ocomp = [top] + [x + 1 if x % 2 else x - 1 for x in range(1, top)] + [0]
    names = [string.ascii_lowercase[j] if m <= 26 else f"a{j + 1}" for j in range(m)]
    labels = ["0"] + [s for name in names for s in (name, name + "'")] + ["1"]
    return FiniteOrtholattice.from_order(leq, ocomp, labels)


def o6() -> FiniteOrtholattice:
    """The benzene ring: 0 < a < b < 1 and 0 < b' < a' < 1."""
    labels = ["0", "a", "b", "b'", "a'", "1"]
    below = {1: {0}, 2: {0, 1}, 3: {0}, 4: {0, 3}, 5: {0, 1, 2, 3, 4}}
    leq = [[x == y or x in below.get(y, ()) for y in range(6)] for x in range(6)]
    return FiniteOrtholattice.from_order(leq, [5, 4, 3, 2, 1, 0], labels)


def cylindric_set_algebra(u: int, d: int, max_elems: int | None = None) -> QuantumCylindricAlgebra:
    """Full cylindric set algebra on the functions d -> u.

    Points are the tuples of ``itertools.product(range(u), repeat=d)`` in that
    order; a lattice element is a set of points encoded as a bitmask.
    """
    if u < 1 or d < 1:
        raise ValueError("cylindric_set_algebra needs u >= 1 and d >= 1")
    points = list(itertools.product(range(u), repeat=d))
    if max_elems is None:
        ensure_size(len(points), f"cylset({u},{d}) function space", 16)
    ensure_size(1 << len(points), f"cylset({u},{d})", MAX_ELEMS, max_elems)
    sep = "" if u <= 10 else "."
    point_names = [sep.join(map(str, p)) for p in points]

    def label(s: int) -> str:
        return "{" + ",".join(point_names[j] for j in range(len(points)) if s >> j & 1) + "}"

    L = _powerset_lattice(len(points), [label(s) for s in range(1 << len(points))])

    def cylinder(i: int, s: int) -> int:
        out = 0
        for j, f in enumerate(points):
            if any(s >> g & 1 and all(points[g][c] == f[c] for c in range(d) if c != i) for g in range(len(points))):
                out |= 1 << j
        return out

    quantifiers = tuple(tuple(cylinder(i, s) for s in range(L.n)) for i in range(d))
    diag = tuple(
        tuple(sum(1 << j for j, f in enumerate(points) if f[i] == f[k]) for k in range(d))
        for i in range(d)
    )
    return QuantumCylindricAlgebra(L, quantifiers, diag)


def simple_quantifier(L: FiniteOrtholattice) -> tuple[int, ...]:
    return tuple(L.bot if x == L.bot else L.top for x in range(L.n))


def with_simple_quantifiers(L: FiniteOrtholattice, d: int) -> QuantumCylindricAlgebra:
    """QCA on ``L`` with the simple quantifier in every dimension and every
    diagonal element equal to top."""
    try:
        report = check_orthomodular(L)
    except NotOrtholattice as e:
        raise NotOrthomodular("not an ortholattice", e.report) from e
    if not report.passed:
        raise NotOrthomodular("lattice is not orthomodular", report)
    q = simple_quantifier(L)
    return QuantumCylindricAlgebra(L, (q,) * d, tuple((L.top,) * d for _ in range(d)))


def product_lattice(L1: FiniteOrtholattice, L2: FiniteOrtholattice) -> FiniteOrtholattice:
    """Direct product; the pair (x, y) has index ``x * L2.n + y``."""
    n1, n2 = L1.n, L2.n
    pairs = [(x, y) for x in range(n1) for y in range(n2)]

    def idx(x: int, y: int) -> int:
        return x * n2 + y

    return FiniteOrtholattice(
        n=n1 * n2,
        leq=tuple(tuple(L1.leq[a][c] and L2.leq[b][e] for c, e in pairs) for a, b in pairs),
        meet=tuple(tuple(idx(L1.meet[a][c], L2.meet[b][e]) for c, e in pairs) for a, b in pairs),
        join=tuple(tuple(idx(L1.join[a][c], L2.join[b][e]) for c, e in pairs) for a, b in pairs),
        ocomp=tuple(idx(L1.ocomp[a], L2.ocomp[b]) for a, b in pairs),
        bot=idx(L1.bot, L2.bot),
        top=idx(L1.top, L2.top),
        labels=tuple(f"({L1.label(a)},{L2.label(b)})" for a, b in pairs),
    )


def product_qca(A: QuantumCylindricAlgebra, B: QuantumCylindricAlgebra) -> QuantumCylindricAlgebra:
    if A.d != B.d:
        raise DimensionMismatch(f"{A.d} dimensions vs {B.d}")
    n2 = B.n
    L = product_lattice(A.lattice, B.lattice)
    pairs = [(x, y) for x in range(A.n) for y in range(n2)]
    quantifiers = tuple(
        tuple(qa[a] * n2 + qb[b] for a, b in pairs) for qa, qb in zip(A.quantifiers, B.quantifiers)
    )
    diag = tuple(
        tuple(A.diag[i][k] * n2 + B.diag[i][k] for k in range(A.d)) for i in range(A.d)
    )
    return QuantumCylindricAlgebra(L, quantifiers, diag)


def projection(A: QuantumCylindricAlgebra, B: QuantumCylindricAlgebra, factor: int = 0) -> list[int]:
    """Map of ``product_qca(A, B)`` onto factor 0 (A) or 1 (B)."""
    if factor == 0:
        return [p // B.n for p in range(A.n * B.n)]
    return [p % B.n for p in range(A.n * B.n)]


def from_name(name: str):
    """Resolve a catalog name: ``boolean:K``, ``mo:M``, ``o6``,
    ``cylset:U:D`` or ``simple:BASE:D``."""
    parts = name.split(":")
    head = parts[0]
    try:
        if head == "boolean" and len(parts) == 2:
            return boolean_algebra(int(parts[1]))
        if head == "mo" and len(parts) == 2:
            return mo(int(parts[1]))
        if head == "o6" and len(parts) == 1:
            return o6()
        if head == "cylset" and len(parts) == 3:
            return cylindric_set_algebra(int(parts[1]), int(parts[2]))
        if head == "simple" and len(parts) >= 3:
            base = from_name(":".join(parts[1:-1]))
            if not isinstance(base, FiniteOrtholattice):
                raise ValueError(f"simple: base {parts[1]!r} is not a lattice")
            return with_simple_quantifiers(base, int(parts[-1]))
    except ValueError as e:
        raise ValueError(f"bad catalog name {name!r}: {e}") from None
    raise ValueError(f"unknown catalog name {name!r}")
