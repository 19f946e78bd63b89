"""Brute-force reference computations, deliberately independent of the
package's own code paths."""

from __future__ import annotations

import itertools

from oqkit.lattice import FiniteOrtholattice, QuantumCylindricAlgebra


def brute_proper_filters(dot, zero: int) -> list[frozenset[int]]:
    """Every subset of the carrier tested against the filter definition."""
    n = len(dot)
    one = dot[0][0]
    up = [[y for y in range(n) if dot[x][y] == one] for x in range(n)]
    out = []
    for mask in range(1, 1 << n):
        if mask >> zero & 1:
            continue
        members = [x for x in range(n) if mask >> x & 1]
        if any(not mask >> y & 1 for x in members for y in up[x]):
            continue
        if all(mask >> dot[dot[dot[x][y]][dot[x][zero]]][zero] & 1 for x in members for y in members):
            out.append(frozenset(members))
    return out


def glb_from_order(leq, x: int, y: int) -> int | None:
    n = len(leq)
    lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
    best = [z for z in lower if all(leq[w][z] for w in lower)]
    return best[0] if len(best) == 1 else None


def is_quantifier_by_closure(L: FiniteOrtholattice, q) -> bool:
    """A closure operator whose fixed points form a sub-ortholattice."""
    n = L.n
    for x in range(n):
        if not L.leq[x][q[x]] or q[q[x]] != q[x]:
            return False
        for y in range(n):
            if L.leq[x][y] and not L.leq[q[x]][q[y]]:
                return False
    closed = [x for x in range(n) if q[x] == x]
    if L.bot not in closed:
        return False
    for x in closed:
        if L.ocomp[x] not in closed:
            return False
        for y in closed:
            if L.meet[x][y] not in closed or L.join[x][y] not in closed:
                return False
    return True


class SetCylindricAlgebra:
    """Cylindric set algebra on functions d -> u with elements as frozensets
    of tuples. Evaluates every QCA condition by direct set computation."""

    def __init__(self, u: int, d: int):
        self.u, self.d = u, d
        self.points = list(itertools.product(range(u), repeat=d))
        self.elements = [
            frozenset(p for j, p in enumerate(self.points) if mask >> j & 1)
            for mask in range(1 << len(self.points))
        ]
        self.top = frozenset(self.points)

    def cylinder(self, i: int, s: frozenset) -> frozenset:
        return frozenset(
            f for f in self.points if any(all(f[c] == g[c] for c in range(self.d) if c != i) for g in s)
        )

    def diagonal(self, i: int, k: int) -> frozenset:
        return frozenset(f for f in self.points if f[i] == f[k])

    def violations(self) -> list[str]:
        bad = []
        E, d = self.elements, self.d
        for i in range(d):
            for s in E:
                c = self.cylinder(i, s)
                if not s <= c or self.cylinder(i, c) != c:
                    bad.append(f"closure {i}")
                if self.cylinder(i, self.top - c) != self.top - c:
                    bad.append(f"2(e) {i}")
                for t in E:
                    if self.cylinder(i, s | t) != c | self.cylinder(i, t):
                        bad.append(f"2(c) {i}")
            if self.cylinder(i, frozenset()) != frozenset():
                bad.append(f"2(a) {i}")
        for i, k in itertools.product(range(d), repeat=2):
            for s in E:
                if self.cylinder(i, self.cylinder(k, s)) != self.cylinder(k, self.cylinder(i, s)):
                    bad.append(f"3 {i},{k}")
            if self.diagonal(i, k) != self.diagonal(k, i) or self.diagonal(i, i) != self.top:
                bad.append(f"4(a) {i},{k}")
        for i, k, l in itertools.product(range(d), repeat=3):
            if i != k and l != k:
                if self.cylinder(k, self.diagonal(i, k) & self.diagonal(k, l)) != self.diagonal(i, l):
                    bad.append(f"4(b) {i},{k},{l}")
        return bad


def relabel_lattice(L: FiniteOrtholattice, perm) -> FiniteOrtholattice:
    """Isomorphic copy where old element x becomes perm[x]."""
    n = L.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return FiniteOrtholattice(
        n=n,
        leq=tuple(tuple(L.leq[inv[a]][inv[b]] for b in range(n)) for a in range(n)),
        meet=tuple(tuple(perm[L.meet[inv[a]][inv[b]]] for b in range(n)) for a in range(n)),
        join=tuple(tuple(perm[L.join[inv[a]][inv[b]]] for b in range(n)) for a in range(n)),
        ocomp=tuple(perm[L.ocomp[inv[a]]] for a in range(n)),
        bot=perm[L.bot],
        top=perm[L.top],
        labels=tuple(L.label(inv[a]) for a in range(n)),
    )


def relabel_qca(A: QuantumCylindricAlgebra, perm) -> QuantumCylindricAlgebra:
    n = A.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return QuantumCylindricAlgebra(
        relabel_lattice(A.lattice, perm),
        tuple(tuple(perm[q[inv[a]]] for a in range(n)) for q in A.quantifiers),
        tuple(tuple(perm[v] for v in row) for row in A.diag),
    )
