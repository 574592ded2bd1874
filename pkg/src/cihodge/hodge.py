"""Dimension-level algebra of pure and mixed Hodge structures.

Nothing here knows about varieties. A :class:`BigradedDims` is a finite table
``(p, q) -> dim``; a :class:`HodgeDiamond` attaches such a table to a smooth
projective variety of a given dimension; a :class:`WeightGradedMHS` is the list
of weight-graded pieces of a mixed Hodge structure on one cohomology group.

All values are immutable and all dimensions are Python integers.
"""

from __future__ import annotations

import operator
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import ConsistencyError, DimensionError, SymmetryError

Bidegree = tuple[int, int]


class BigradedDims(Mapping):
    """Finite map ``(p, q) -> positive int``; absent keys read as 0.

    Zero entries are dropped on construction so that equality is equality of
    supports and values.

    >>> BigradedDims({(1, 1): 19}).twist(1)
    BigradedDims({(2, 2): 19})
    >>> BigradedDims({(1, 0): 2})[(5, 5)]
    0
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, entries: Mapping[Bidegree, int] | Iterable[tuple[Bidegree, int]] | None = None):
        data: dict[Bidegree, int] = {}
        if entries is None:
            items: Iterable = ()
        elif isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        for key, value in items:
            p, q = (operator.index(x) for x in key)
            value = operator.index(value)
            if value < 0:
                raise ConsistencyError(f"negative dimension {value} at {(p, q)}")
            if (p, q) in data:
                raise ValueError(f"duplicate bidegree {(p, q)}")
            if value:
                data[(p, q)] = value
        self._data = dict(sorted(data.items()))
        self._hash = None

    def __getitem__(self, key: Bidegree) -> int:
        return self._data.get(tuple(key), 0)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __iter__(self) -> Iterator[Bidegree]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, BigradedDims):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        return f"BigradedDims({self._data!r})"

    def __add__(self, other: BigradedDims) -> BigradedDims:
        out = dict(self._data)
        for key, value in other.items():
            out[key] = out.get(key, 0) + value
        return BigradedDims(out)

    def __sub__(self, other: BigradedDims) -> BigradedDims:
        """Componentwise difference; a negative entry is a :class:`ConsistencyError`."""
        out = dict(self._data)
        for key, value in other.items():
            out[key] = out.get(key, 0) - value
        bad = {k: v for k, v in out.items() if v < 0}
        if bad:
            raise ConsistencyError(f"subtraction below zero at {sorted(bad)}")
        return BigradedDims(out)

    @property
    def total(self) -> int:
        return sum(self._data.values())

    def twist(self, s: int) -> BigradedDims:
        return BigradedDims({(p + s, q + s): v for (p, q), v in self._data.items()})

    def conjugate(self) -> BigradedDims:
        return BigradedDims({(q, p): v for (p, q), v in self._data.items()})

    def is_symmetric(self) -> bool:
        return self == self.conjugate()

    def restrict(self, weight: int) -> BigradedDims:
        """Entries with ``p + q == weight``."""
        return BigradedDims({k: v for k, v in self._data.items() if sum(k) == weight})

    def weights(self) -> set[int]:
        return {p + q for p, q in self._data}


EMPTY_DIMS = BigradedDims()


def tate_twist(dims: BigradedDims, s: int) -> BigradedDims:
    """Tensor with the s-th power of the Hodge-Tate structure (1,1)."""
    return dims.twist(s)


class HodgeDiamond:
    """Hodge numbers of a smooth projective variety of complex dimension ``dim``.

    Stored as one :class:`BigradedDims` over ``0 <= p, q <= dim``; the table in
    cohomological degree ``k`` is the part with ``p + q == k``.
    """

    __slots__ = ("dim", "numbers")

    def __init__(self, dim: int, numbers: BigradedDims | Mapping[Bidegree, int]):
        dim = operator.index(dim)
        if dim < 0:
            raise DimensionError(f"dimension must be >= 0, got {dim}")
        if not isinstance(numbers, BigradedDims):
            numbers = BigradedDims(numbers)
        for p, q in numbers:
            if not (0 <= p <= dim and 0 <= q <= dim):
                raise DimensionError(f"h^{{{p},{q}}} outside a diamond of dimension {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "numbers", numbers)

    def __setattr__(self, name, value):
        raise AttributeError("HodgeDiamond is immutable")

    @classmethod
    def from_degrees(cls, dim: int, tables: Mapping[int, BigradedDims]) -> HodgeDiamond:
        merged = EMPTY_DIMS
        for k, table in tables.items():
            if table.weights() - {k}:
                raise DimensionError(f"degree-{k} table has entries off p+q={k}")
            merged = merged + table
        return cls(dim, merged)

    @classmethod
    def from_matrix(cls, rows: list[list[int]]) -> HodgeDiamond:
        """``rows[p][q] = h^{p,q}``."""
        n = len(rows) - 1
        return cls(n, {(p, q): v for p, row in enumerate(rows) for q, v in enumerate(row)})

    def degree(self, k: int) -> BigradedDims:
        return self.numbers.restrict(k)

    def h(self, p: int, q: int) -> int:
        return self.numbers[(p, q)]

    def betti(self, k: int) -> int:
        return self.degree(k).total

    def euler_characteristic(self) -> int:
        return sum((-1) ** (p + q) * v for (p, q), v in self.numbers.items())

    def violations(self) -> list[str]:
        """Describe every broken diamond invariant; empty iff the diamond is valid."""
        n = self.dim
        out = []
        asym = sorted({min((p, q), (q, p)) for (p, q) in self.numbers if self.h(p, q) != self.h(q, p)})
        if asym:
            out.append(f"conjugation symmetry fails at {asym}")
        nondual = sorted(
            {min((p, q), (n - p, n - q)) for (p, q) in self.numbers if self.h(p, q) != self.h(n - p, n - q)}
        )
        if nondual:
            out.append(f"duality h^{{p,q}} = h^{{n-p,n-q}} fails at {nondual}")
        if self.degree(0).total < 1:
            out.append("h^{0,0} must be at least 1")
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self.dim == other.dim and self.numbers == other.numbers

    def __hash__(self) -> int:
        return hash((self.dim, self.numbers))

    def __repr__(self) -> str:
        return f"HodgeDiamond(dim={self.dim}, numbers={dict(self.numbers)!r})"

    def rows(self) -> list[list[int]]:
        """Display rows, top (degree 2n) first; row k lists h^{p,k-p} for p descending."""
        n = self.dim
        return [
            [self.h(p, k - p) for p in range(min(k, n), max(0, k - n) - 1, -1)]
            for k in range(2 * n, -1, -1)
        ]

    def __str__(self) -> str:
        rows = self.rows()
        cells = [[str(v) for v in row] for row in rows]
        width = max(len(c) for row in cells for c in row) + 2
        span = (self.dim + 1) * width * 2
        lines = []
        for row in cells:
            line = "".join(c.center(2 * width) for c in row)
            lines.append(line.center(span).rstrip())
        indent = min(len(line) - len(line.lstrip()) for line in lines)
        return "\n".join(line[indent:] for line in lines)


class EmptyVariety:
    """The empty variety (dimension -1): every cohomology table is zero."""

    dim = -1
    numbers = EMPTY_DIMS

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def degree(self, k: int) -> BigradedDims:
        return EMPTY_DIMS

    def h(self, p: int, q: int) -> int:
        return 0

    def betti(self, k: int) -> int:
        return 0

    def euler_characteristic(self) -> int:
        return 0

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = EmptyVariety()


def dual_reflect(diamond: HodgeDiamond, k: int) -> BigradedDims:
    """Image of the degree-``2n-k`` table under ``(p, q) -> (n-p, n-q)``."""
    n = diamond.dim
    if not 0 <= k <= 2 * n:
        raise DimensionError(f"degree {k} outside [0, {2 * n}]")
    return BigradedDims({(n - p, n - q): v for (p, q), v in diamond.degree(2 * n - k).items()})


def euler_characteristic(diamond: HodgeDiamond) -> int:
    return diamond.euler_characteristic()


@dataclass(frozen=True)
class WeightGradedMHS:
    """Weight-graded pieces ``Gr^W_w`` of a mixed Hodge structure on ``H^degree``."""

    degree: int
    pieces: tuple[tuple[int, BigradedDims], ...]

    def __post_init__(self):
        pieces = tuple((operator.index(w), d) for w, d in self.pieces)
        object.__setattr__(self, "pieces", pieces)
        weights = [w for w, _ in pieces]
        if any(b <= a for a, b in zip(weights, weights[1:])):
            raise ValueError(f"weights must be strictly increasing, got {weights}")
        for w, dims in pieces:
            if dims.weights() - {w}:
                raise DimensionError(f"weight-{w} piece has entries off p+q={w}")
            if not dims.is_symmetric():
                raise SymmetryError(f"weight-{w} piece is not conjugation symmetric: {dims!r}")

    def piece(self, weight: int) -> BigradedDims:
        for w, dims in self.pieces:
            if w == weight:
                return dims
        return EMPTY_DIMS

    @property
    def total(self) -> int:
        return sum(d.total for _, d in self.pieces)

    def collapse(self) -> BigradedDims:
        """Sum of all pieces; each Gr_F^p contribution stays at its own (p, q)."""
        out = EMPTY_DIMS
        for _, dims in self.pieces:
            out = out + dims
        return out


def graded_F_dims(mhs: WeightGradedMHS) -> dict[int, int]:
    """``p -> dim Gr_F^p``, summed over every weight piece."""
    out: dict[int, int] = {}
    for _, dims in mhs.pieces:
        for (p, _q), v in dims.items():
            out[p] = out.get(p, 0) + v
    return dict(sorted(out.items(), reverse=True))
