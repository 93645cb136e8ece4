"""Finite switches: maps X x X -> X x X stored as a pair of tables.

Elements of the carrier are 0..n-1 (sets written {1,2,...} in the
literature are shifted down by one).  A switch S is kept as the two
component tables t1[x][y] = S1(x,y), t2[x][y] = S2(x,y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatchError, NonUnitError

Row = tuple[int, ...]
Table = tuple[Row, ...]


def _freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class PairTable:
    """A map X x X -> X x X on X = {0..n-1}; backbone of S and tau."""

    n: int
    t1: Table
    t2: Table

    def __post_init__(self):
        object.__setattr__(self, "t1", _freeze(self.t1))
        object.__setattr__(self, "t2", _freeze(self.t2))
        n = self.n
        if n < 1:
            raise ValueError("carrier must be nonempty")
        for t in (self.t1, self.t2):
            if len(t) != n or any(len(row) != n for row in t):
                raise ValueError(f"tables must be {n}x{n}")
            if any(not (0 <= v < n) for row in t for v in row):
                raise ValueError("table entries out of range")

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.t1[x][y], self.t2[x][y]

    def is_left_invertible(self) -> bool:
        # for each fixed x, y -> t1[x][y] is a permutation
        full = set(range(self.n))
        return all(set(row) == full for row in self.t1)

    def is_right_invertible(self) -> bool:
        # for each fixed y, x -> t2[x][y] is a permutation
        full = set(range(self.n))
        return all({self.t2[x][y] for x in range(self.n)} == full for y in range(self.n))

    def is_bijective(self) -> bool:
        return len({self.apply(x, y) for x in range(self.n) for y in range(self.n)}) == self.n**2

    def inverse(self) -> "PairTable":
        if not self.is_bijective():
            raise ValueError("table is not bijective")
        n = self.n
        u1 = [[0] * n for _ in range(n)]
        u2 = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                a, b = self.apply(x, y)
                u1[a][b], u2[a][b] = x, y
        return PairTable(n, u1, u2)

    def compose(self, other: "PairTable") -> "PairTable":
        """self after other, as maps on X x X."""
        if self.n != other.n:
            raise DimensionMismatchError("carrier sizes differ")
        n = self.n
        u1 = [[0] * n for _ in range(n)]
        u2 = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                a, b = other.apply(x, y)
                u1[x][y], u2[x][y] = self.apply(a, b)
        return PairTable(n, u1, u2)

    def is_involutive(self) -> bool:
        return all(self.apply(*self.apply(x, y)) == (x, y)
                   for x in range(self.n) for y in range(self.n))

    def relabel(self, g) -> "PairTable":
        """Conjugate by the permutation g: (g x g) o T o (g x g)^-1."""
        n = self.n
        ginv = [0] * n
        for i, v in enumerate(g):
            ginv[v] = i
        u1 = [[g[self.t1[ginv[x]][ginv[y]]] for y in range(n)] for x in range(n)]
        u2 = [[g[self.t2[ginv[x]][ginv[y]]] for y in range(n)] for x in range(n)]
        return PairTable(n, u1, u2)

    def cycles(self) -> list[list[tuple[int, int]]]:
        """Cycle decomposition as a permutation of X x X (bijective tables)."""
        if not self.is_bijective():
            raise ValueError("cycle decomposition needs a bijective table")
        seen = set()
        out = []
        for x in range(self.n):
            for y in range(self.n):
                if (x, y) in seen:
                    continue
                cyc = [(x, y)]
                seen.add((x, y))
                a, b = self.apply(x, y)
                while (a, b) != (x, y):
                    cyc.append((a, b))
                    seen.add((a, b))
                    a, b = self.apply(a, b)
                out.append(cyc)
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def key(self):
        return (self.t1, self.t2)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "t1": [list(r) for r in self.t1],
                           "t2": [list(r) for r in self.t2]})

    @classmethod
    def from_dict(cls, d) -> "PairTable":
        return cls(int(d["n"]), d["t1"], d["t2"])

    @classmethod
    def from_json(cls, text: str) -> "PairTable":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_function(cls, n: int, fn) -> "PairTable":
        pairs = [[fn(x, y) for y in range(n)] for x in range(n)]
        t1 = [[pairs[x][y][0] for y in range(n)] for x in range(n)]
        t2 = [[pairs[x][y][1] for y in range(n)] for x in range(n)]
        return cls(n, t1, t2)


def check_yang_baxter(t: PairTable) -> bool:
    """Braid-form set-theoretic Yang-Baxter identity over all triples.

    (Id x S)(S x Id)(Id x S) = (S x Id)(Id x S)(S x Id) on X^3.
    """
    n = t.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # left side
                b1, c1 = t.apply(y, z)
                a2, b2 = t.apply(x, b1)
                b3, c3 = t.apply(b2, c1)
                lhs = (a2, b3, c3)
                # right side
                a4, b4 = t.apply(x, y)
                b5, c5 = t.apply(b4, z)
                a6, b6 = t.apply(a4, b5)
                rhs = (a6, b6, c5)
                if lhs != rhs:
                    return False
    return True


def check_biquandle(t: PairTable):
    """Return the diagonal fix-point permutation s if t is a biquandle, else None.

    Biquandle = bijective + left/right invertible Yang-Baxter solution whose
    fixed points are exactly the graph of a bijection s: X -> X.
    """
    if not (t.is_left_invertible() and t.is_right_invertible() and t.is_bijective()):
        return None
    if not check_yang_baxter(t):
        return None
    n = t.n
    s = [None] * n
    count = 0
    for x in range(n):
        for y in range(n):
            if t.apply(x, y) == (x, y):
                if s[x] is not None:
                    return None
                s[x] = y
                count += 1
    if count != n or any(v is None for v in s) or len(set(s)) != n:
        return None
    return tuple(s)


@dataclass(frozen=True)
class Biquandle:
    table: PairTable
    s_map: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.table.n

    @classmethod
    def from_table(cls, t: PairTable) -> "Biquandle":
        s = check_biquandle(t)
        if s is None:
            raise ValueError("table is not a biquandle")
        return cls(t, s)

    def inverse_table(self) -> PairTable:
        return self.table.inverse()


@dataclass(frozen=True)
class Quandle:
    """Self-distributive idempotent operation given by op[x][y] = x <| y."""

    n: int
    op: Table

    def __post_init__(self):
        object.__setattr__(self, "op", _freeze(self.op))
        n = self.n
        if len(self.op) != n or any(len(r) != n for r in self.op):
            raise ValueError(f"op must be {n}x{n}")
        full = set(range(n))
        for y in range(n):
            if {self.op[x][y] for x in range(n)} != full:
                raise ValueError("- <| y must be a bijection for every y")
        for x in range(n):
            if self.op[x][x] != x:
                raise ValueError("quandle needs x <| x = x")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if self.op[self.op[x][y]][z] != self.op[self.op[x][z]][self.op[y][z]]:
                        raise ValueError("self-distributivity fails")

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "op": [list(r) for r in self.op]})

    @classmethod
    def from_dict(cls, d) -> "Quandle":
        return cls(int(d["n"]), d["op"])


def flip_switch(n: int) -> Biquandle:
    t = PairTable.from_function(n, lambda x, y: (y, x))
    return Biquandle(t, tuple(range(n)))


def is_flip(t: PairTable) -> bool:
    return t == flip_switch(t.n).table


def i2_switch() -> Biquandle:
    """The nontrivial involutive biquandle of size 2: (x,y) -> (y+1, x+1)."""
    t = PairTable.from_function(2, lambda x, y: ((y + 1) % 2, (x + 1) % 2))
    return Biquandle.from_table(t)


def make_bialexander(m: int, s: int, t: int) -> Biquandle:
    """Bialexander switch S(x,y) = (s*y, t*x + (1-s*t)*y) on Z/m."""
    s %= m
    t %= m
    if gcd(s, m) != 1:
        raise NonUnitError(f"s={s} is not a unit mod {m}")
    if gcd(t, m) != 1:
        raise NonUnitError(f"t={t} is not a unit mod {m}")
    table = PairTable.from_function(
        m, lambda x, y: ((s * y) % m, (t * x + (1 - s * t) * y) % m))
    return Biquandle.from_table(table)


def dihedral_switch(n: int) -> Biquandle:
    """D_n: the Alexander switch with s=1, t=-1, i.e. (x,y) -> (y, 2y-x)."""
    return make_bialexander(n, 1, n - 1)


def make_quandle_switch(q: Quandle) -> Biquandle:
    """The switch S(x,y) = (y, x <| y) induced by a quandle."""
    t = PairTable.from_function(q.n, lambda x, y: (y, q.op[x][y]))
    return Biquandle.from_table(t)


def dihedral_quandle(n: int) -> Quandle:
    return Quandle(n, [[(2 * y - x) % n for y in range(n)] for x in range(n)])


def trivial_quandle(n: int) -> Quandle:
    return Quandle(n, [[x for _ in range(n)] for x in range(n)])
