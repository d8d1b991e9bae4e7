"""Finite fields, Latin squares, MOLS, and orthogonal arrays.

Field elements are integers 0..q-1, read as base-p digit vectors against a
fixed irreducible polynomial per order. Latin square and orthogonal array
symbols are 1-based, matching the text formats used elsewhere.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import UnsupportedParameterError
from .graphs import Graph, k_color
from .transform import Partition

__all__ = [
    "FiniteField",
    "LatinSquare",
    "mols_complete",
    "are_orthogonal",
    "cyclic_square",
    "OrthogonalArray",
    "oa_from_mols",
    "oa_graph",
    "oa_extendible",
    "max_mols_available",
]

MAX_FIELD_ORDER = 49

# fixed irreducible polynomials, coefficients by ascending degree, monic
_POLYNOMIALS = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (1, 1, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 1, 1),
}


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
    return q, 1  # q itself is prime


class FiniteField:
    """Arithmetic tables for GF(q), q a prime power up to 49."""

    __slots__ = ("q", "p", "e", "_add", "_mul", "_inv")

    def __init__(self, q: int, p: int, e: int, add, mul, inv):
        self.q = q
        self.p = p
        self.e = e
        self._add = add
        self._mul = mul
        self._inv = inv

    @classmethod
    def of_order(cls, q: int) -> "FiniteField":
        return _make_field(q)

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        row = self._add[a]
        return row.index(0)

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self.neg(b)]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def __repr__(self) -> str:
        return f"FiniteField.of_order({self.q})"


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


@lru_cache(maxsize=None)
def _make_field(q: int) -> FiniteField:
    pe = _prime_power(q)
    if pe is None:
        raise UnsupportedParameterError(f"{q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise UnsupportedParameterError(
            f"fields are tabulated up to order {MAX_FIELD_ORDER}, got {q}"
        )
    p, e = pe
    if e == 1:
        add = [[(a + b) % p for b in range(q)] for a in range(q)]
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
    else:
        modulus = _POLYNOMIALS[q]
        add = [
            [
                _undigits(
                    [(x + y) % p for x, y in zip(_digits(a, p, e), _digits(b, p, e))], p
                )
                for b in range(q)
            ]
            for a in range(q)
        ]
        mul = []
        for a in range(q):
            da = _digits(a, p, e)
            row = []
            for b in range(q):
                db = _digits(b, p, e)
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            prod[i + j] = (prod[i + j] + x * y) % p
                for d in range(len(prod) - 1, e - 1, -1):
                    c = prod[d]
                    if c:
                        prod[d] = 0
                        for i in range(e):
                            prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
                row.append(_undigits(prod[:e], p))
            mul.append(row)
    # field axioms, checked exhaustively at this size
    for a in range(q):
        assert add[a][0] == a and mul[a][1] == a and mul[a][0] == 0
        assert sorted(add[a]) == list(range(q))
        for b in range(q):
            assert add[a][b] == add[b][a] and mul[a][b] == mul[b][a]
    for a in range(q):
        for b in range(q):
            for c in range(q):
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    inv = [0] * q
    for a in range(1, q):
        inv[a] = mul[a].index(1)
    add = [tuple(r) for r in add]
    mul = [tuple(r) for r in mul]
    return FiniteField(q, p, e, tuple(add), tuple(mul), tuple(inv))


# -------------------------------------------------------------- latin squares

class LatinSquare:
    """n x n array over symbols 1..n, each once per row and column."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        expected = list(range(1, n + 1))
        for r in rows:
            if sorted(r) != expected:
                raise ValueError(f"row {r} is not a permutation of 1..{n}")
        for j in range(n):
            col = sorted(r[j] for r in rows)
            if col != expected:
                raise ValueError(f"column {j + 1} is not a permutation of 1..{n}")
        self.n = n
        self.rows = rows

    def cell(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def transpose(self) -> "LatinSquare":
        return LatinSquare(zip(*self.rows))

    def symbol_partition(self) -> Partition:
        """Partition of the n*n cell grid into the n symbol position classes.

        Cell (i,j) is point i*n+j; each block is a transversal of the grid.
        """
        blocks: dict[int, list[int]] = {}
        for i, row in enumerate(self.rows):
            for j, s in enumerate(row):
                blocks.setdefault(s, []).append(i * self.n + j)
        return Partition(list(blocks.values()))

    def __eq__(self, other) -> bool:
        return isinstance(other, LatinSquare) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"<LatinSquare n={self.n}>"


def mols_complete(q: int) -> list[LatinSquare]:
    """The standard complete family of q-1 mutually orthogonal squares.

    Square m has cell (i,j) = m*i + j in GF(q). Any two squares of the family
    agree on exactly one cell per symbol pair.
    """
    field = FiniteField.of_order(q)
    squares = []
    for m in range(1, q):
        rows = [
            [field.add(field.mul(m, i), j) + 1 for j in range(q)] for i in range(q)
        ]
        squares.append(LatinSquare(rows))
    return squares


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    if a.n != b.n:
        raise ValueError("squares have different sizes")
    pairs = {
        (a.rows[i][j], b.rows[i][j]) for i in range(a.n) for j in range(a.n)
    }
    return len(pairs) == a.n * a.n


def cyclic_square(n: int) -> LatinSquare:
    """Latin square with cell (i,j) = ((j - i) mod n) + 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    return LatinSquare([[(j - i) % n + 1 for j in range(n)] for i in range(n)])


# ---------------------------------------------------------- orthogonal arrays

class OrthogonalArray:
    """Strength-2, index-1 array: k rows of n*n entries over symbols 1..n.

    Every ordered symbol pair appears exactly once across any two rows.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        rows = tuple(tuple(r) for r in rows)
        if n < 1:
            raise ValueError("need n >= 1")
        if len(rows) < 2:
            raise ValueError("need at least 2 rows")
        width = n * n
        for r in rows:
            if len(r) != width:
                raise ValueError(f"row length {len(r)} != {width}")
            counts = [0] * (n + 1)
            for s in r:
                if not 1 <= s <= n:
                    raise ValueError(f"symbol {s} outside 1..{n}")
                counts[s] += 1
            if any(c != n for c in counts[1:]):
                raise ValueError("each symbol must appear exactly n times per row")
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                pairs = set(zip(rows[a], rows[b]))
                if len(pairs) != width:
                    raise ValueError(f"rows {a} and {b} repeat a symbol pair")
        self.n = n
        self.rows = rows

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> int:
        return self.n * self.n

    def with_row(self, row) -> "OrthogonalArray":
        return OrthogonalArray(self.n, self.rows + (tuple(row),))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrthogonalArray)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"<OrthogonalArray k={self.k} n={self.n}>"


def oa_from_mols(squares, n: int | None = None) -> OrthogonalArray:
    """Row-index row, column-index row, then one row per square.

    Columns run over cells (i,j) in order i*n+j. With no squares this is the
    trivial two-row array, so ``n`` is required then.
    """
    squares = list(squares)
    if squares:
        size = squares[0].n
        if any(sq.n != size for sq in squares):
            raise ValueError("squares have different sizes")
        if n is not None and n != size:
            raise ValueError(f"n={n} disagrees with squares of size {size}")
        n = size
        for a in range(len(squares)):
            for b in range(a + 1, len(squares)):
                if not are_orthogonal(squares[a], squares[b]):
                    raise ValueError(f"squares {a} and {b} are not orthogonal")
    elif n is None:
        raise ValueError("need n when no squares are given")
    cells = [(i, j) for i in range(n) for j in range(n)]
    rows = [
        tuple(i + 1 for i, _ in cells),
        tuple(j + 1 for _, j in cells),
    ]
    for sq in squares:
        rows.append(tuple(sq.rows[i][j] for i, j in cells))
    return OrthogonalArray(n, rows)


def oa_graph(oa: OrthogonalArray) -> Graph:
    """Columns as vertices, adjacent when they agree in some row."""
    width = oa.columns
    edges = []
    for u in range(width):
        for v in range(u + 1, width):
            if any(r[u] == r[v] for r in oa.rows):
                edges.append((u, v))
    return Graph(width, edges)


def oa_extendible(
    oa: OrthogonalArray, *, node_budget: int | None = None
) -> tuple[int, ...] | None:
    """A row extending the array by one constraint, or None if none exists.

    An extending row is exactly a proper n-coloring of the column graph: color
    classes may never repeat a symbol in any existing row.
    """
    g = oa_graph(oa)
    n = oa.n
    first = oa.rows[0]
    anchor = first[0]
    clique = [c for c in range(oa.columns) if first[c] == anchor]
    precolor = {c: i for i, c in enumerate(clique)}
    coloring = k_color(g, n, precolor=precolor, node_budget=node_budget)
    if coloring is None:
        return None
    row = tuple(c + 1 for c in coloring)
    oa.with_row(row)  # validates
    return row


def max_mols_available(n: int) -> int:
    """Size of the largest family this package can construct."""
    if _prime_power(n) is not None and n <= MAX_FIELD_ORDER:
        return n - 1
    raise UnsupportedParameterError(
        f"no construction tabulated for order {n}; prime powers up to "
        f"{MAX_FIELD_ORDER} are supported"
    )

