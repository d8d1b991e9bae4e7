"""Permutation groups, automorphism groups of graphs, and group naming.

Permutations are tuples mapping position -> image, composed left to right
like transformations.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque

from .errors import BudgetExceededError
from .graphs import (
    Graph,
    automorphisms,
    canonical_form,
    canonical_permutation,
    complement,
    from_graph6,
)

__all__ = [
    "PermGroup",
    "automorphism_group",
    "group_name",
]

DEFAULT_ELEMENT_CAP = 200_000


def _mul(a, b):
    # apply a then b
    return tuple(b[x] for x in a)


def _inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def _perm_order(a) -> int:
    n = len(a)
    seen = [False] * n
    result = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        result = math.lcm(result, length)
    return result


class PermGroup:
    """Group generated by permutations of {0..degree-1}."""

    __slots__ = ("degree", "generators", "_chain")

    def __init__(self, degree: int, generators):
        identity = tuple(range(degree))
        gens = set()
        for g in generators:
            g = tuple(g)
            if sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
            if g != identity:
                gens.add(g)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(sorted(gens)))
        object.__setattr__(self, "_chain", None)

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    # --------------------------------------------------------- Schreier-Sims

    def _stabilizer_chain(self):
        """Deterministic chain of (base point, transversal, level generators)."""
        if self._chain is not None:
            return self._chain
        degree = self.degree
        identity = tuple(range(degree))
        strong = list(self.generators)
        base: list[int] = []
        for g in strong:
            if all(g[b] == b for b in base):
                base.append(next(x for x in range(degree) if g[x] != x))

        def gens_fixing(level):
            return [g for g in strong if all(g[base[j]] == base[j] for j in range(level))]

        def transversal(level, gens):
            beta = base[level]
            t = {beta: identity}
            queue = deque([beta])
            while queue:
                p = queue.popleft()
                rep = t[p]
                for g in gens:
                    q = g[p]
                    if q not in t:
                        t[q] = _mul(rep, g)
                        queue.append(q)
            return t

        def strip(g, start, tables):
            for level in range(start, len(base)):
                p = g[base[level]]
                table = tables[level]
                if table is None or p not in table:
                    return g, level
                g = _mul(g, _inv(table[p]))
            return g, len(base)

        tables: list[dict | None] = [None] * len(base)
        i = len(base) - 1
        while i >= 0:
            level_gens = gens_fixing(i)
            tables[i] = transversal(i, level_gens)
            complete = True
            for p in sorted(tables[i]):
                rep = tables[i][p]
                for s in level_gens:
                    u = _mul(rep, s)
                    back = tables[i][u[base[i]]]
                    u = _mul(u, _inv(back))
                    if u == identity:
                        continue
                    residual, j = strip(u, i + 1, tables)
                    if residual == identity:
                        continue
                    strong.append(residual)
                    if j == len(base):
                        base.append(next(x for x in range(degree) if residual[x] != x))
                        tables.append(None)
                    i = j
                    complete = False
                    break
                if not complete:
                    break
            if complete:
                i -= 1
        chain = []
        for level in range(len(base)):
            level_gens = gens_fixing(level)
            chain.append((base[level], transversal(level, level_gens), level_gens))
        object.__setattr__(self, "_chain", chain)
        return chain

    def order(self) -> int:
        result = 1
        for _beta, table, _gens in self._stabilizer_chain():
            result *= len(table)
        return result

    def contains(self, perm) -> bool:
        g = tuple(perm)
        if sorted(g) != list(range(self.degree)):
            return False
        for beta, table, _gens in self._stabilizer_chain():
            p = g[beta]
            if p not in table:
                return False
            g = _mul(g, _inv(table[p]))
        return g == tuple(range(self.degree))

    # ------------------------------------------------------------ enumeration

    def elements(self, limit: int = DEFAULT_ELEMENT_CAP) -> list[tuple[int, ...]]:
        identity = tuple(range(self.degree))
        seen = {identity}
        queue = deque([identity])
        while queue:
            t = queue.popleft()
            for g in self.generators:
                new = _mul(t, g)
                if new not in seen:
                    if len(seen) >= limit:
                        raise BudgetExceededError("closure", limit, "group elements")
                    seen.add(new)
                    queue.append(new)
        return sorted(seen)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            _mul(a, b) == _mul(b, a)
            for i, a in enumerate(gens)
            for b in gens[i + 1 :]
        )

    def center_order(self, limit: int = DEFAULT_ELEMENT_CAP) -> int:
        gens = self.generators
        return sum(
            1
            for t in self.elements(limit)
            if all(_mul(t, g) == _mul(g, t) for g in gens)
        )

    def derived_subgroup_order(self) -> int:
        identity = tuple(range(self.degree))
        gens = self.generators
        inverses = {g: _inv(g) for g in gens}
        commutators = set()
        for a in gens:
            for b in gens:
                c = _mul(_mul(_mul(_inv(a), _inv(b)), a), b)
                if c != identity:
                    commutators.add(c)
        # normal closure: conjugating each generator keeps the set generating
        queue = deque(commutators)
        while queue:
            h = queue.popleft()
            for g in gens:
                conj = _mul(_mul(inverses[g], h), g)
                if conj != identity and conj not in commutators:
                    commutators.add(conj)
                    queue.append(conj)
        if not commutators:
            return 1
        return PermGroup(self.degree, commutators).order()

    def element_order_counts(self, limit: int = DEFAULT_ELEMENT_CAP) -> dict[int, int]:
        counts: dict[int, int] = {}
        for t in self.elements(limit):
            k = _perm_order(t)
            counts[k] = counts.get(k, 0) + 1
        return counts

    def fingerprint(self, limit: int = DEFAULT_ELEMENT_CAP) -> tuple:
        """Abstract-isomorphism invariants used for catalog lookup."""
        orders = tuple(sorted(self.element_order_counts(limit).items()))
        return (
            self.order(),
            orders,
            self.is_abelian(),
            self.center_order(limit),
            self.derived_subgroup_order(),
        )

    # ---------------------------------------------------------------- actions

    def is_transitive(self) -> bool:
        if self.degree <= 1:
            return True
        orbit = {0}
        queue = deque([0])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = g[p]
                if q not in orbit:
                    orbit.add(q)
                    queue.append(q)
        return len(orbit) == self.degree

    def orbit_count_on_pairs(self) -> int:
        n = self.degree
        seen: set[tuple[int, int]] = set()
        count = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in seen:
                    continue
                count += 1
                orbit = {(u, v)}
                queue = deque([(u, v)])
                while queue:
                    a, b = queue.popleft()
                    for g in self.generators:
                        qa, qb = g[a], g[b]
                        pair = (qa, qb) if qa < qb else (qb, qa)
                        if pair not in orbit:
                            orbit.add(pair)
                            queue.append(pair)
                seen |= orbit
        return count

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} generators={len(self.generators)}>"


# ------------------------------------------------------- automorphism groups

def automorphism_group(g: Graph) -> PermGroup:
    """Automorphism group of g, decomposing along components when possible."""
    n = g.n
    if n == 0:
        return PermGroup(0, [])
    comps = g.components()
    if len(comps) > 1:
        return _component_aut(g, comps)
    co = complement(g)
    if len(co.components()) > 1:
        return automorphism_group(co)
    return PermGroup(n, automorphisms(g))


def _component_aut(g: Graph, comps) -> PermGroup:
    n = g.n
    classes: dict[bytes, list] = {}
    for comp in comps:
        sub = g.induced(comp)
        cert = canonical_form(sub)
        canon = canonical_permutation(sub)
        classes.setdefault(cert, []).append((comp, canon, _inv(canon)))
    gens: list[tuple[int, ...]] = []
    identity = list(range(n))
    for cert in sorted(classes):
        members = classes[cert]
        canon_graph = from_graph6(cert.decode("ascii"))
        inner = automorphism_group(canon_graph)
        comp, canon, canon_inv = members[0]
        for a in inner.generators:
            perm = identity.copy()
            for local, v in enumerate(comp):
                perm[v] = comp[canon_inv[a[canon[local]]]]
            gens.append(tuple(perm))
        for i in range(len(members) - 1):
            comp_a, canon_a, _ = members[i]
            comp_b, _, canon_b_inv = members[i + 1]
            perm = identity.copy()
            for local, v in enumerate(comp_a):
                w = comp_b[canon_b_inv[canon_a[local]]]
                perm[v] = w
                perm[w] = v
            gens.append(tuple(perm))
    return PermGroup(n, gens)


# ------------------------------------------------------------------- catalog

def _perm(n: int, *cycles) -> tuple[int, ...]:
    p = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


def _catalog_specs() -> list[tuple[str, int, list, int]]:
    # (name, degree, generators, expected order)
    return [
        ("1", 1, [], 1),
        ("C2", 2, [_perm(2, (0, 1))], 2),
        ("C2xC2", 4, [_perm(4, (0, 1)), _perm(4, (2, 3))], 4),
        ("C2xC2xC2", 6, [_perm(6, (0, 1)), _perm(6, (2, 3)), _perm(6, (4, 5))], 8),
        ("C3", 3, [_perm(3, (0, 1, 2))], 3),
        ("C4", 4, [_perm(4, (0, 1, 2, 3))], 4),
        ("C5", 5, [_perm(5, (0, 1, 2, 3, 4))], 5),
        ("C6", 6, [_perm(6, (0, 1, 2, 3, 4, 5))], 6),
        ("C7", 7, [_perm(7, (0, 1, 2, 3, 4, 5, 6))], 7),
        ("S3", 3, [_perm(3, (0, 1)), _perm(3, (0, 1, 2))], 6),
        ("D8", 4, [_perm(4, (0, 1, 2, 3)), _perm(4, (1, 3))], 8),
        ("D10", 5, [_perm(5, (0, 1, 2, 3, 4)), _perm(5, (1, 4), (2, 3))], 10),
        ("D12", 6, [_perm(6, (0, 1, 2, 3, 4, 5)), _perm(6, (1, 5), (2, 4))], 12),
        ("D14", 7, [_perm(7, (0, 1, 2, 3, 4, 5, 6)), _perm(7, (1, 6), (2, 5), (3, 4))], 14),
        ("A4", 4, [_perm(4, (0, 1, 2)), _perm(4, (1, 2, 3))], 12),
        ("C2xD8", 6, [_perm(6, (0, 1, 2, 3)), _perm(6, (1, 3)), _perm(6, (4, 5))], 16),
        (
            "C2xC2xS3",
            7,
            [_perm(7, (0, 1)), _perm(7, (2, 3)), _perm(7, (4, 5)), _perm(7, (4, 5, 6))],
            24,
        ),
        (
            "S3xS3",
            6,
            [_perm(6, (0, 1)), _perm(6, (0, 1, 2)), _perm(6, (3, 4)), _perm(6, (3, 4, 5))],
            36,
        ),
        (
            "S3xS3:C2",
            6,
            [_perm(6, (0, 1)), _perm(6, (0, 1, 2)), _perm(6, (0, 3), (1, 4), (2, 5))],
            72,
        ),
        (
            "D8xS3",
            7,
            [_perm(7, (0, 1, 2, 3)), _perm(7, (1, 3)), _perm(7, (4, 5)), _perm(7, (4, 5, 6))],
            48,
        ),
        ("S4", 4, [_perm(4, (0, 1)), _perm(4, (0, 1, 2, 3))], 24),
        ("C2xS4", 6, [_perm(6, (0, 1)), _perm(6, (0, 1, 2, 3)), _perm(6, (4, 5))], 48),
        (
            "S3xS4",
            7,
            [_perm(7, (0, 1)), _perm(7, (0, 1, 2)), _perm(7, (3, 4)), _perm(7, (3, 4, 5, 6))],
            144,
        ),
        ("S5", 5, [_perm(5, (0, 1)), _perm(5, (0, 1, 2, 3, 4))], 120),
        ("C2xS5", 7, [_perm(7, (0, 1)), _perm(7, (0, 1, 2, 3, 4)), _perm(7, (5, 6))], 240),
        ("S6", 6, [_perm(6, (0, 1)), _perm(6, (0, 1, 2, 3, 4, 5))], 720),
        ("S7", 7, [_perm(7, (0, 1)), _perm(7, (0, 1, 2, 3, 4, 5, 6))], 5040),
    ]


_CATALOG: dict[tuple, str] | None = None


def _catalog() -> dict[tuple, str]:
    global _CATALOG
    if _CATALOG is None:
        table: dict[tuple, str] = {}
        for name, degree, gens, expected_order in _catalog_specs():
            group = PermGroup(degree, gens)
            assert group.order() == expected_order, (name, group.order())
            fp = group.fingerprint()
            assert fp not in table, (name, table[fp])
            table[fp] = name
        _CATALOG = table
    return _CATALOG


def group_name(group: PermGroup) -> str:
    """Catalog name for small groups, a generic order-based label otherwise."""
    order = group.order()
    try:
        fp = group.fingerprint()
    except BudgetExceededError:
        return f"G{order}"
    known = _catalog().get(fp)
    if known is not None:
        return known
    digest = hashlib.sha1(repr(fp).encode("ascii")).hexdigest()[:6]
    return f"G{order}#{digest}"
