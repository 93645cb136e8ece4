"""Universal coefficient groups as finite presentations, and their
abelianizations via exact integer Smith normal form.

Generators are indexed 0..2n^2-1: first all f_{xy} in row-major order,
then all h_{xy}.  A relation is a word of (generator, exponent) letters;
only exponent sums matter after abelianizing, but the words keep their
order so they can be evaluated in noncommutative targets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DimensionMismatchError, NotInvolutiveError
from .pairs import SingularPair
from .pairtable import PairTable

Word = tuple[tuple[int, int], ...]


def f_gen(n: int, x: int, y: int) -> int:
    return x * n + y


def h_gen(n: int, x: int, y: int) -> int:
    return n * n + x * n + y


def generator_name(n: int, g: int) -> str:
    kind = "f" if g < n * n else "h"
    g %= n * n
    return f"{kind}({g // n},{g % n})"


def _word(*letters) -> Word:
    """Freely reduce a sequence of (gen, exp) letters."""
    out: list[list[int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g and out[-1][1] + e == 0:
            out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def _inv_word(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def _relation(lhs: Word, rhs: Word) -> Word:
    return _word(*lhs, *_inv_word(rhs))


@dataclass(frozen=True)
class Presentation:
    n: int
    kind: str                      # "nc" | "ab"
    relations: tuple[Word, ...]

    @property
    def num_generators(self) -> int:
        return 2 * self.n * self.n

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for w in self.relations:
            row = [0] * self.num_generators
            for g, e in w:
                row[g] += e
            rows.append(row)
        return rows


def build_unc_presentation(p: SingularPair) -> Presentation:
    """The seven relation families presenting U_nc^{fh}(X, S, tau)."""
    n = p.n
    st = p.biquandle.table
    tau = p.tau
    s1, s2 = st.t1, st.t2
    t1, t2 = tau.t1, tau.t2
    F = lambda x, y: (f_gen(n, x, y), 1)
    H = lambda x, y: (h_gen(n, x, y), 1)
    rels = []
    for x in range(n):
        for y in range(n):
            sx, sy = st.apply(x, y)
            tx, ty = tau.apply(x, y)
            # (c3)  h(x,y) = f(x,y) h(S(x,y))
            rels.append(_relation(_word(H(x, y)), _word(F(x, y), H(sx, sy))))
            # (c4)  h(S(x,y)) = h(x,y) f(tau(x,y))
            rels.append(_relation(_word(H(sx, sy)), _word(H(x, y), F(tx, ty))))
            for z in range(n):
                # (f1)  f(x,y) f(S2(x,y),z) = f(x,S1(y,z)) f(S2(x,S1(y,z)),S2(y,z))
                rels.append(_relation(
                    _word(F(x, y), F(s2[x][y], z)),
                    _word(F(x, s1[y][z]), F(s2[x][s1[y][z]], s2[y][z]))))
                # (f4)  f(x,y) f(S2(x,y),z) = f(x,tau1(y,z)) f(S2(x,tau1(y,z)),tau2(y,z))
                rels.append(_relation(
                    _word(F(x, y), F(s2[x][y], z)),
                    _word(F(x, t1[y][z]), F(s2[x][t1[y][z]], t2[y][z]))))
                # (h1)  h(S1(x,y),S1(S2(x,y),z)) = h(y,z)
                rels.append(_relation(
                    _word(H(s1[x][y], s1[s2[x][y]][z])), _word(H(y, z))))
                # (c1)  f(x,S1(y,z)) h(S2(x,S1(y,z)),S2(y,z)) = h(x,y) f(tau2(x,y),z)
                rels.append(_relation(
                    _word(F(x, s1[y][z]), H(s2[x][s1[y][z]], s2[y][z])),
                    _word(H(x, y), F(t2[x][y], z))))
                # (c2)  f(y,z) h(S2(x,S1(y,z)),S2(y,z)) = h(x,y) f(tau1(x,y),S1(tau2(x,y),z))
                rels.append(_relation(
                    _word(F(y, z), H(s2[x][s1[y][z]], s2[y][z])),
                    _word(H(x, y), F(t1[x][y], s1[t2[x][y]][z]))))
    rels = [w for w in rels if w]
    seen, out = set(), []
    for w in rels:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return Presentation(n, "nc", tuple(out))


def build_ab_presentation(p: SingularPair) -> Presentation:
    """The abelian presentation of Ab^{fh}: (f1'),(f2'),(c1'),(c2'),(c3')."""
    n = p.n
    st = p.biquandle.table
    tau = p.tau
    s1, s2 = st.t1, st.t2
    t1, t2 = tau.t1, tau.t2
    s = p.biquandle.s_map
    F = lambda x, y: (f_gen(n, x, y), 1)
    H = lambda x, y: (h_gen(n, x, y), 1)
    rels = []
    for x in range(n):
        # (f2')  f(x, s(x)) = 1
        rels.append(_word(F(x, s[x])))
        for y in range(n):
            sx, sy = st.apply(x, y)
            tx, ty = tau.apply(x, y)
            # (c3')  f(x,y) h(S(x,y)) = h(x,y) f(tau(x,y))
            rels.append(_relation(_word(F(x, y), H(sx, sy)),
                                  _word(H(x, y), F(tx, ty))))
            for z in range(n):
                # (f1')
                rels.append(_relation(
                    _word(F(x, y), F(s2[x][y], z),
                          F(s1[x][y], s1[s2[x][y]][z])),
                    _word(F(x, s1[y][z]), F(s2[x][s1[y][z]], s2[y][z]),
                          F(y, z))))
                # (c1')
                rels.append(_relation(
                    _word(H(y, z), F(x, t1[y][z]),
                          F(s2[x][t1[y][z]], t2[y][z])),
                    _word(F(x, y), F(s2[x][y], z),
                          H(s1[x][y], s1[s2[x][y]][z]))))
                # (c2')
                rels.append(_relation(
                    _word(F(y, z), F(x, s1[y][z]),
                          H(s2[x][s1[y][z]], s2[y][z])),
                    _word(H(x, y), F(t2[x][y], z),
                          F(t1[x][y], s1[t2[x][y]][z]))))
    rels = [w for w in rels if w]
    seen, out = set(), []
    for w in rels:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return Presentation(n, "ab", tuple(out))


# ---------------------------------------------------------------------------
# Smith normal form over Z (exact, arbitrary precision)
# ---------------------------------------------------------------------------

def _identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_normal_form(M):
    """Return (U, D, V) with U*M*V = D diagonal, d1 | d2 | ..., U,V unimodular.

    Pivoting always picks the nonzero entry of least absolute value in the
    remaining submatrix, which keeps coefficients small on the relation
    matrices this package produces.  Plain Python integers, so no overflow.
    """
    A = [list(map(int, row)) for row in M]
    r = len(A)
    c = len(A[0]) if r else 0
    U = _identity(r)
    V = _identity(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):      # row dst += q * row src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    k = 0
    while k < min(r, c):
        # locate minimal-abs nonzero pivot in A[k:, k:]
        piv = None
        for i in range(k, r):
            for j in range(k, c):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        while True:
            i, j = piv
            swap_rows(k, i)
            swap_cols(k, j)
            # clear column k
            dirty = False
            for i in range(k + 1, r):
                if A[i][k]:
                    q = A[i][k] // A[k][k]
                    add_row(i, k, -q)
                    if A[i][k]:
                        dirty = True
            for j in range(k + 1, c):
                if A[k][j]:
                    q = A[k][j] // A[k][k]
                    add_col(j, k, -q)
                    if A[k][j]:
                        dirty = True
            if not dirty:
                break
            piv = None
            for i in range(k, r):
                for j in range(k, c):
                    if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
        if A[k][k] < 0:
            negate_row(k)
        k += 1

    # enforce the divisibility chain d1 | d2 | ...
    m = k
    changed = True
    while changed:
        changed = False
        for i in range(m - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if a and b % a:
                # col i += col i+1 puts b under a; rediagonalizing the 2x2
                # block replaces (a, b) with (gcd, lcm)
                add_col(i, i + 1, 1)
                _block_reduce(A, U, V, i)
                if A[i][i] < 0:
                    negate_row(i)
                if A[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    return U, [row[:] for row in A], V


def _block_reduce(A, U, V, i):
    """Rediagonalize the 2x2 block at (i,i) after a column merge."""
    rows = (i, i + 1)
    cols = (i, i + 1)
    while True:
        piv = None
        for x in rows:
            for y in cols:
                if A[x][y] and (piv is None or abs(A[x][y]) < abs(A[piv[0]][piv[1]])):
                    piv = (x, y)
        if piv is None:
            return
        px, py = piv
        if (px, py) != (i, i):
            if px != i:
                A[i], A[px] = A[px], A[i]
                U[i], U[px] = U[px], U[i]
            if py != i:
                for row in A:
                    row[i], row[py] = row[py], row[i]
                for row in V:
                    row[i], row[py] = row[py], row[i]
        done = True
        for x in (i + 1,):
            if A[x][i]:
                q = A[x][i] // A[i][i]
                A[x] = [a - q * b for a, b in zip(A[x], A[i])]
                U[x] = [a - q * b for a, b in zip(U[x], U[i])]
                if A[x][i]:
                    done = False
        for y in (i + 1,):
            if A[i][y]:
                q = A[i][y] // A[i][i]
                for row in A:
                    row[y] -= q * row[i]
                for row in V:
                    row[y] -= q * row[i]
                if A[i][y]:
                    done = False
        if done:
            return


# ---------------------------------------------------------------------------
# finitely generated abelian groups in invariant-factor coordinates
# ---------------------------------------------------------------------------

Element = tuple[tuple[int, ...], tuple[int, ...]]    # (free coords, torsion coords)


@dataclass(frozen=True)
class AbelianizedGroup:
    """Z^rank + sum Z/d_i, with the image of every presentation generator."""

    rank: int
    torsion: tuple[int, ...]
    coord_map: tuple[Element, ...]
    free_labels: tuple[str, ...] = ()
    torsion_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.free_labels:
            object.__setattr__(self, "free_labels",
                               tuple(f"z{i+1}" for i in range(self.rank)))
        if not self.torsion_labels:
            object.__setattr__(self, "torsion_labels",
                               tuple(f"u{i+1}" for i in range(len(self.torsion))))

    # group operations on elements -----------------------------------
    def identity(self) -> Element:
        return (0,) * self.rank, (0,) * len(self.torsion)

    def mul(self, a: Element, b: Element) -> Element:
        free = tuple(x + y for x, y in zip(a[0], b[0]))
        tors = tuple((x + y) % d for x, y, d in zip(a[1], b[1], self.torsion))
        return free, tors

    def inv(self, a: Element) -> Element:
        free = tuple(-x for x in a[0])
        tors = tuple((-x) % d for x, d in zip(a[1], self.torsion))
        return free, tors

    def power(self, a: Element, e: int) -> Element:
        free = tuple(e * x for x in a[0])
        tors = tuple((e * x) % d for x, d in zip(a[1], self.torsion))
        return free, tors

    def generator(self, g: int) -> Element:
        return self.coord_map[g]

    def normal_form(self, word: Word) -> Element:
        out = self.identity()
        for g, e in word:
            out = self.mul(out, self.power(self.coord_map[g], e))
        return out

    def is_identity(self, a: Element) -> bool:
        return a == self.identity()

    def invariant_factors(self) -> tuple[int, ...]:
        return self.torsion + (0,) * self.rank

    def render_element(self, a: Element) -> str:
        parts = []
        for lbl, e, d in zip(self.torsion_labels, a[1], self.torsion):
            e %= d
            if e == 1:
                parts.append(lbl)
            elif e:
                parts.append(f"{lbl}^{e}")
        for lbl, e in zip(self.free_labels, a[0]):
            if e == 1:
                parts.append(lbl)
            elif e:
                parts.append(f"{lbl}^{e}")
        return "*".join(parts) if parts else "1"

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion),
                "coord_map": [[list(a[0]), list(a[1])] for a in self.coord_map],
                "free_labels": list(self.free_labels),
                "torsion_labels": list(self.torsion_labels)}

    @classmethod
    def from_dict(cls, d):
        cm = tuple((tuple(a[0]), tuple(a[1])) for a in d["coord_map"])
        return cls(int(d["rank"]), tuple(d["torsion"]), cm,
                   tuple(d.get("free_labels", ())),
                   tuple(d.get("torsion_labels", ())))


def abelianize(pres: Presentation) -> AbelianizedGroup:
    """Quotient Z^{2n^2} by the rows of the relation exponent matrix."""
    g = pres.num_generators
    M = pres.exponent_matrix()
    if not M:
        coord = tuple(
            (tuple(int(i == j) for i in range(g)), ()) for j in range(g))
        return AbelianizedGroup(g, (), coord)
    U, D, V = smith_normal_form(M)
    diag = [D[i][i] for i in range(min(len(D), g)) if D[i][i] != 0]
    r0 = len(diag)
    torsion_idx = [i for i in range(r0) if diag[i] > 1]
    torsion = tuple(diag[i] for i in torsion_idx)
    free_idx = list(range(r0, g))
    # generator e_j has coordinates row j of V in the new basis
    coord = []
    for j in range(g):
        free = tuple(V[j][i] for i in free_idx)
        tors = tuple(V[j][i] % diag[i] for i in torsion_idx)
        coord.append((free, tors))
    return AbelianizedGroup(g - r0, torsion, tuple(coord))


# ---------------------------------------------------------------------------
# finite groups given by multiplication tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity_index: int = field(init=False, default=0)
    inverse: tuple[int, ...] = field(init=False, default=())

    def __post_init__(self):
        k = self.order
        t = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", t)
        if len(t) != k or any(len(r) != k for r in t):
            raise ValueError("multiplication table has wrong shape")
        ident = None
        for e in range(k):
            if all(t[e][x] == x and t[x][e] == x for x in range(k)):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        inv = [None] * k
        for x in range(k):
            for y in range(k):
                if t[x][y] == ident and t[y][x] == ident:
                    inv[x] = y
        if any(v is None for v in inv):
            raise ValueError("missing inverses")
        for x in range(k):
            for y in range(k):
                for z in range(k):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        raise ValueError("multiplication is not associative")
        object.__setattr__(self, "identity_index", ident)
        object.__setattr__(self, "inverse", tuple(inv))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def identity(self) -> int:
        return self.identity_index

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def conjugacy_class_rep(self, a: int) -> int:
        return min(self.mul(self.mul(g, a), self.inv(g)) for g in range(self.order))

    @classmethod
    def cyclic(cls, k: int) -> "FiniteGroup":
        return cls(k, [[(i + j) % k for j in range(k)] for i in range(k)])

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        import itertools
        perms = sorted(itertools.permutations(range(n)))
        idx = {p: i for i, p in enumerate(perms)}
        table = [[idx[tuple(p[q[i]] for i in range(n))] for q in perms]
                 for p in perms]
        return cls(len(perms), table)

    def to_dict(self):
        return {"order": self.order, "mul": [list(r) for r in self.table]}

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["order"]), d["mul"])


# ---------------------------------------------------------------------------
# group-ring elements (finitely supported integer combinations)
# ---------------------------------------------------------------------------

class GroupRingElement:
    """Sum of group elements with integer coefficients; zero coeffs dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for elem, coeff in items:
            if coeff:
                self.terms[elem] = self.terms.get(elem, 0) + coeff
                if not self.terms[elem]:
                    del self.terms[elem]

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return GroupRingElement(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"GroupRingElement({sorted(self.terms.items())})"

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    @classmethod
    def of(cls, elem, coeff: int = 1):
        return cls([(elem, coeff)])

    def to_dict(self):
        return {"terms": [{"elem": [list(e[0]), list(e[1])]
                           if isinstance(e, tuple) else e, "coeff": c}
                          for e, c in sorted(self.terms.items())]}


def equivalence_classes_involutive(S: PairTable) -> list[tuple[tuple[int, int], ...]]:
    """Finest partition of X x X closed under (y,z) ~ (S1(x,y), S1(S2(x,y),z)).

    Defined for involutive S only; the class count equals the rank of the
    abelianized universal group of the pair (S, S).
    """
    if not S.is_involutive():
        raise NotInvolutiveError("S is not involutive")
    n = S.n
    parent = {(x, y): (x, y) for x in range(n) for y in range(n)}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[max(rp, rq)] = min(rp, rq)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                union((y, z), (S.t1[x][y], S.t1[S.t2[x][y]][z]))
    classes: dict[tuple, list] = {}
    for p in parent:
        classes.setdefault(find(p), []).append(p)
    return sorted(tuple(sorted(v)) for v in classes.values())
