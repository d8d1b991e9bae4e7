"""Transformation semigroups: closures, synchronization tests, homomorphisms.

Products are left to right throughout: a word [i, j] means apply generator i
first, then generator j.
"""

from __future__ import annotations

from collections import deque

from .errors import BudgetExceededError, ClosureCapExceededError
from .graphs import Graph, _bits
from .transform import Partition, Transformation

__all__ = [
    "SemigroupClosure",
    "close",
    "is_synchronizing",
    "collapsible_pairs",
    "synchronizing_word",
    "transformation_of_word",
    "min_rank_of_generators",
    "count_homomorphisms",
    "exists_homomorphism",
    "homomorphisms_iter",
    "count_endomorphisms",
    "endomorphisms_iter",
    "quotient_by_pair",
    "collapsible",
    "monogenic_index_period",
    "idempotents",
    "minimal_ideal",
    "left_zero_semigroup",
]

DEFAULT_CLOSURE_CAP = 5_000_000
DEFAULT_IMAGE_STATE_CAP = 1_000_000


def _check_generators(generators) -> tuple[Transformation, ...]:
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError(f"generators act on different point counts: {g.n} vs {n}")
    return gens


class SemigroupClosure:
    """All products of the generators, with word recovery."""

    def __init__(self, generators, elements, parents):
        self.generators = generators
        self.elements = elements
        self.element_set = frozenset(elements)
        self.n = generators[0].n
        self._parents = parents

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t) -> bool:
        return t in self.element_set

    @property
    def min_rank(self) -> int:
        return min(t.rank for t in self.elements)

    @property
    def contains_constant(self) -> bool:
        return self.min_rank == 1

    def elements_of_rank(self, r: int) -> list[Transformation]:
        return [t for t in self.elements if t.rank == r]

    def kernels_of_min_rank(self) -> set[Partition]:
        r = self.min_rank
        return {t.kernel() for t in self.elements if t.rank == r}

    def word_of(self, t: Transformation) -> list[int]:
        """Generator indices whose left-to-right product equals t."""
        if t not in self._parents:
            raise KeyError(f"{t} is not in the closure")
        word: list[int] = []
        cur = t
        while cur is not None:
            prev, gen_index = self._parents[cur]
            word.append(gen_index)
            cur = prev
        word.reverse()
        return word

    def idempotents(self) -> list[Transformation]:
        return [t for t in self.elements if t.is_idempotent()]


def close(generators, *, cap: int = DEFAULT_CLOSURE_CAP) -> SemigroupClosure:
    """Breadth-first closure of the generators under composition."""
    gens = _check_generators(generators)
    parents: dict[Transformation, tuple[Transformation | None, int]] = {}
    elements: list[Transformation] = []
    queue: deque[Transformation] = deque()
    for i, g in enumerate(gens):
        if g not in parents:
            parents[g] = (None, i)
            elements.append(g)
            queue.append(g)
    while queue:
        t = queue.popleft()
        for i, g in enumerate(gens):
            new = t * g
            if new not in parents:
                parents[new] = (t, i)
                elements.append(new)
                queue.append(new)
                if len(elements) > cap:
                    raise ClosureCapExceededError(cap, len(elements))
    return SemigroupClosure(gens, elements, parents)


def transformation_of_word(generators, word) -> Transformation:
    gens = _check_generators(generators)
    result = Transformation.identity(gens[0].n)
    for i in word:
        result = result * gens[i]
    return result


# ----------------------------------------------------------- synchronization

def _pair_collapse_table(gens, n: int):
    """For each unordered pair, which pairs can eventually be collapsed.

    Returns (collapsible set of (u,v) pairs, step map). step[p] = (gen index,
    next pair or None) along a shortest path to a collapse.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    reverse: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {p: [] for p in pairs}
    step: dict[tuple[int, int], tuple[int, tuple[int, int] | None]] = {}
    seeds: deque[tuple[int, int]] = deque()
    for p in pairs:
        u, v = p
        for i, g in enumerate(gens):
            gu, gv = g.images[u], g.images[v]
            if gu == gv:
                if p not in step:
                    step[p] = (i, None)
                    seeds.append(p)
            else:
                q = (gu, gv) if gu < gv else (gv, gu)
                reverse[q].append((p, i))
    while seeds:
        q = seeds.popleft()
        for p, i in reverse[q]:
            if p not in step:
                step[p] = (i, q)
                seeds.append(p)
    return set(step), step


def collapsible_pairs(generators) -> set[tuple[int, int]]:
    """Pairs (u,v), u<v, merged by some product of the generators."""
    gens = _check_generators(generators)
    return _pair_collapse_table(gens, gens[0].n)[0]


def is_synchronizing(generators) -> bool:
    """True when some product of the generators is a constant map.

    Equivalent to every point pair being collapsible: collapsing pairs one at
    a time drives any image set down to a single point.
    """
    gens = tuple(generators)
    if not gens:
        return False
    gens = _check_generators(gens)
    n = gens[0].n
    collapsible_set = _pair_collapse_table(gens, n)[0]
    return len(collapsible_set) == n * (n - 1) // 2


def synchronizing_word(generators) -> list[int] | None:
    """Generator indices whose product has rank 1, or None if impossible."""
    gens = tuple(generators)
    if not gens:
        return None
    gens = _check_generators(gens)
    n = gens[0].n
    collapsible_set, step = _pair_collapse_table(gens, n)
    if len(collapsible_set) < n * (n - 1) // 2:
        return None
    word: list[int] = []
    current = set(range(n))
    while len(current) > 1:
        pts = sorted(current)
        pair = (pts[0], pts[1])
        while pair is not None:
            gen_index, pair = step[pair]
            word.append(gen_index)
            current = {gens[gen_index].images[x] for x in current}
    return word


def min_rank_of_generators(generators, *, state_cap: int = DEFAULT_IMAGE_STATE_CAP) -> int:
    """Minimum rank over all nonempty products, by search on image sets."""
    gens = _check_generators(generators)
    best = min(g.rank for g in gens)
    seen: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()
    for g in gens:
        state = frozenset(g.image_set)
        if state not in seen:
            seen.add(state)
            queue.append(state)
    while queue and best > 1:
        state = queue.popleft()
        for g in gens:
            new = frozenset(g.images[x] for x in state)
            if new not in seen:
                seen.add(new)
                if len(seen) > state_cap:
                    raise BudgetExceededError("closure", state_cap, "image-set search")
                best = min(best, len(new))
                queue.append(new)
    return best


# ----------------------------------------------------- homomorphism searching

def _bfs_order(g: Graph, component) -> list[int]:
    start = max(component, key=lambda v: g.adj[v].bit_count())
    order = [start]
    seen = 1 << start
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in _bits(g.adj[v]):
            if not seen >> u & 1:
                seen |= 1 << u
                order.append(u)
                queue.append(u)
    return order


def _earlier_neighbors(g: Graph, order) -> list[list[int]]:
    # positions (into order) of each vertex's neighbors that come earlier
    pos = {v: i for i, v in enumerate(order)}
    result = []
    for i, v in enumerate(order):
        result.append([pos[u] for u in _bits(g.adj[v]) if pos[u] < i])
    return result


class _Budget:
    __slots__ = ("limit", "used", "what")

    def __init__(self, limit: int | None, what: str):
        self.limit = limit
        self.used = 0
        self.what = what

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError("search nodes", self.limit, self.what)


def _count_maps(g: Graph, h: Graph, order, budget: _Budget) -> int:
    earlier = _earlier_neighbors(g, order)
    hadj = h.adj
    full = (1 << h.n) - 1
    depth = len(order)
    assignment = [0] * depth

    def rec(i: int) -> int:
        if i == depth:
            return 1
        budget.tick()
        cand = full
        for j in earlier[i]:
            cand &= hadj[assignment[j]]
            if not cand:
                return 0
        total = 0
        for w in _bits(cand):
            assignment[i] = w
            total += rec(i + 1)
        return total

    return rec(0)


def _exists_map(g: Graph, h: Graph, order, budget: _Budget) -> bool:
    earlier = _earlier_neighbors(g, order)
    hadj = h.adj
    full = (1 << h.n) - 1
    depth = len(order)
    assignment = [0] * depth

    def rec(i: int) -> bool:
        if i == depth:
            return True
        budget.tick()
        cand = full
        for j in earlier[i]:
            cand &= hadj[assignment[j]]
            if not cand:
                return False
        for w in _bits(cand):
            assignment[i] = w
            if rec(i + 1):
                return True
        return False

    return rec(0)


def count_homomorphisms(g: Graph, h: Graph, *, node_budget: int | None = None) -> int:
    """Number of edge-preserving maps from g into h.

    Multiplicative over the components of g, so large disconnected counts
    stay cheap.
    """
    if g.n == 0:
        return 1
    budget = _Budget(node_budget, "homomorphism count")
    total = 1
    for comp in g.components():
        total *= _count_maps(g, h, _bfs_order(g, comp), budget)
        if total == 0:
            return 0
    return total


def exists_homomorphism(g: Graph, h: Graph, *, node_budget: int | None = None) -> bool:
    budget = _Budget(node_budget, "homomorphism search")
    return all(_exists_map(g, h, _bfs_order(g, comp), budget) for comp in g.components())


def homomorphisms_iter(g: Graph, h: Graph, *, node_budget: int | None = None):
    """Yield every homomorphism g -> h as an image tuple over g's vertices."""
    if g.n == 0:
        yield ()
        return
    order: list[int] = []
    for comp in g.components():
        order.extend(_bfs_order(g, comp))
    earlier = _earlier_neighbors(g, order)
    hadj = h.adj
    full = (1 << h.n) - 1
    budget = _Budget(node_budget, "homomorphism enumeration")
    images = [0] * g.n

    def rec(i: int):
        if i == g.n:
            yield tuple(images)
            return
        budget.tick()
        cand = full
        for j in earlier[i]:
            cand &= hadj[images[order[j]]]
            if not cand:
                return
        v = order[i]
        for w in _bits(cand):
            images[v] = w
            yield from rec(i + 1)

    yield from rec(0)


def count_endomorphisms(g: Graph, *, node_budget: int | None = None) -> int:
    return count_homomorphisms(g, g, node_budget=node_budget)


def endomorphisms_iter(g: Graph, *, node_budget: int | None = None):
    for images in homomorphisms_iter(g, g, node_budget=node_budget):
        yield Transformation(images)


def quotient_by_pair(g: Graph, u: int, v: int) -> tuple[Graph, tuple[int, ...]]:
    """Merge non-adjacent v into u; returns (quotient, old->new vertex map)."""
    if g.has_edge(u, v):
        raise ValueError(f"cannot merge adjacent vertices {u} and {v}")
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"bad vertex pair ({u},{v})")
    if u > v:
        u, v = v, u
    mapping = []
    for w in range(g.n):
        if w == v:
            mapping.append(u)
        elif w > v:
            mapping.append(w - 1)
        else:
            mapping.append(w)
    edges = []
    for a, b in g.edges():
        ma, mb = mapping[a], mapping[b]
        if ma != mb:
            edges.append((ma, mb))
    return Graph(g.n - 1, edges), tuple(mapping)


def collapsible(g: Graph, u: int, v: int, *, node_budget: int | None = None) -> bool:
    """True when some endomorphism of g maps u and v to the same vertex.

    Such an endomorphism is exactly a homomorphism from the quotient that
    merges u and v back into g; adjacent pairs are never collapsible.
    """
    if g.has_edge(u, v):
        return False
    quotient, _ = quotient_by_pair(g, u, v)
    return exists_homomorphism(quotient, g, node_budget=node_budget)


# ------------------------------------------------------------ ideal structure

def monogenic_index_period(t: Transformation) -> tuple[int, int]:
    """Least (i, p) with t^(i+p) = t^i, powers counted from 1."""
    seen = {t: 1}
    cur = t
    k = 1
    while True:
        cur = cur * t
        k += 1
        if cur in seen:
            i = seen[cur]
            return i, k - i
        seen[cur] = k


def idempotents(elements) -> list[Transformation]:
    return [t for t in elements if t.is_idempotent()]


def minimal_ideal(closure: SemigroupClosure) -> list[Transformation]:
    """The unique minimal two-sided ideal: all elements of minimal rank."""
    r = closure.min_rank
    return [t for t in closure.elements if t.rank == r]


def left_zero_semigroup(closure: SemigroupClosure) -> list[Transformation]:
    """A maximal left-zero subsemigroup: x * y = x for all members.

    Takes the idempotents of the minimal ideal that share one image set; each
    fixes that image pointwise, so composing two of them keeps the first.
    """
    ideal = minimal_ideal(closure)
    by_image: dict[frozenset[int], list[Transformation]] = {}
    for t in ideal:
        if t.is_idempotent():
            by_image.setdefault(t.image_set, []).append(t)
    if not by_image:
        raise AssertionError("minimal ideal always contains idempotents")
    best_image = sorted(by_image, key=lambda img: (-len(by_image[img]), sorted(img)))[0]
    return sorted(by_image[best_image], key=lambda t: t.images)
