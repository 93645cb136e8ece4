"""Cocycle pairs and the two invariants: the noncommutative per-component
weight product and the abelian state sum.

Weights at a crossing met with incoming colors (x, y):

    positive crossing, passed on the under-strand (in1):  f(x, y)
    negative crossing, passed on the under-strand (in2):  f(S^-1(x,y))^-1
    singular crossing, every passage:                     h(x, y)

A component's value is the ordered product from its basepoint, reduced
to a conjugacy class representative; the state sum multiplies the
weights of all crossings once each, with no order, and sums over
colorings in the integral group ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .coloring import enumerate_colorings
from .diagram import NEG, POS, SING, SingularDiagram
from .errors import (CocycleInvalidError, DimensionMismatchError,
                     UnknownNameError)
from .pairs import SingularPair, builtin_pair
from .presentation import (AbelianizedGroup, FiniteGroup, GroupRingElement,
                           Presentation, abelianize, build_ab_presentation,
                           build_unc_presentation, f_gen, h_gen)

Target = Union[FiniteGroup, AbelianizedGroup]

NC, AB = "nc", "ab"


@dataclass(frozen=True)
class CocyclePair:
    target: Target
    f: tuple
    h: tuple
    kind: str                      # "nc" | "ab"

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(tuple(r) for r in self.f))
        object.__setattr__(self, "h", tuple(tuple(r) for r in self.h))
        if self.kind not in (NC, AB):
            raise ValueError(f"kind must be nc or ab, got {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.f)


def _ops(target: Target):
    if isinstance(target, FiniteGroup):
        return (target.identity(), target.mul, target.inv,
                target.conjugacy_class_rep)
    return (target.identity(), target.mul, target.inv, lambda a: a)


def _target_abelian(target: Target) -> bool:
    return isinstance(target, AbelianizedGroup) or target.is_abelian()


@dataclass(frozen=True)
class CocycleCheck:
    ok: bool
    violations: tuple[tuple[str, tuple], ...]


def check_nc_cocycle(p: SingularPair, c: CocyclePair) -> CocycleCheck:
    """The nine noncommutative conditions (f1)-(f4), (h1), (c1)-(c4)."""
    if c.kind != NC:
        raise CocycleInvalidError("cocycle pair is not of noncommutative kind")
    if c.n != p.n:
        raise DimensionMismatchError("cocycle tables do not match the pair")
    n = p.n
    ident, mul, inv, _ = _ops(c.target)
    st = p.biquandle.table
    s1, s2 = st.t1, st.t2
    t1, t2 = p.tau.t1, p.tau.t2
    smap = p.biquandle.s_map
    f, h = c.f, c.h
    bad = {}

    def record(name, wit):
        if name not in bad:
            bad[name] = wit

    for x in range(n):
        if f[x][smap[x]] != ident:
            record("f3", (x,))
        for y in range(n):
            sx, sy = s1[x][y], s2[x][y]
            tx, ty = t1[x][y], t2[x][y]
            if h[x][y] != mul(f[x][y], h[sx][sy]):
                record("c3", (x, y))
            if h[sx][sy] != mul(h[x][y], f[tx][ty]):
                record("c4", (x, y))
            for z in range(n):
                if mul(f[x][y], f[s2[x][y]][z]) != \
                        mul(f[x][s1[y][z]], f[s2[x][s1[y][z]]][s2[y][z]]):
                    record("f1", (x, y, z))
                if f[s1[x][y]][s1[s2[x][y]][z]] != f[y][z]:
                    record("f2", (x, y, z))
                if mul(f[x][y], f[s2[x][y]][z]) != \
                        mul(f[x][t1[y][z]], f[s2[x][t1[y][z]]][t2[y][z]]):
                    record("f4", (x, y, z))
                if h[s1[x][y]][s1[s2[x][y]][z]] != h[y][z]:
                    record("h1", (x, y, z))
                if mul(f[x][s1[y][z]], h[s2[x][s1[y][z]]][s2[y][z]]) != \
                        mul(h[x][y], f[t2[x][y]][z]):
                    record("c1", (x, y, z))
                if mul(f[y][z], h[s2[x][s1[y][z]]][s2[y][z]]) != \
                        mul(h[x][y], f[t1[x][y]][s1[t2[x][y]][z]]):
                    record("c2", (x, y, z))
    order = ("f1", "f2", "f3", "f4", "h1", "c1", "c2", "c3", "c4")
    viols = tuple((k, bad[k]) for k in order if k in bad)
    return CocycleCheck(not viols, viols)


def check_ab_cocycle(p: SingularPair, c: CocyclePair) -> CocycleCheck:
    """The five abelian conditions (f1'), (f2'), (c1'), (c2'), (c3')."""
    if c.kind != AB:
        raise CocycleInvalidError("cocycle pair is not of abelian kind")
    if not _target_abelian(c.target):
        raise CocycleInvalidError("abelian cocycle pair needs an abelian target")
    if c.n != p.n:
        raise DimensionMismatchError("cocycle tables do not match the pair")
    n = p.n
    ident, mul, inv, _ = _ops(c.target)
    st = p.biquandle.table
    s1, s2 = st.t1, st.t2
    t1, t2 = p.tau.t1, p.tau.t2
    smap = p.biquandle.s_map
    f, h = c.f, c.h
    bad = {}

    def record(name, wit):
        if name not in bad:
            bad[name] = wit

    def prod(*els):
        out = ident
        for e in els:
            out = mul(out, e)
        return out

    for x in range(n):
        if f[x][smap[x]] != ident:
            record("f2'", (x,))
        for y in range(n):
            sx, sy = s1[x][y], s2[x][y]
            tx, ty = t1[x][y], t2[x][y]
            if mul(f[x][y], h[sx][sy]) != mul(h[x][y], f[tx][ty]):
                record("c3'", (x, y))
            for z in range(n):
                lhs = prod(f[x][y], f[s2[x][y]][z], f[s1[x][y]][s1[s2[x][y]][z]])
                rhs = prod(f[x][s1[y][z]], f[s2[x][s1[y][z]]][s2[y][z]], f[y][z])
                if lhs != rhs:
                    record("f1'", (x, y, z))
                lhs = prod(h[y][z], f[x][t1[y][z]], f[s2[x][t1[y][z]]][t2[y][z]])
                rhs = prod(f[x][y], f[s2[x][y]][z], h[s1[x][y]][s1[s2[x][y]][z]])
                if lhs != rhs:
                    record("c1'", (x, y, z))
                lhs = prod(f[y][z], f[x][s1[y][z]], h[s2[x][s1[y][z]]][s2[y][z]])
                rhs = prod(h[x][y], f[t2[x][y]][z], f[t1[x][y]][s1[t2[x][y]][z]])
                if lhs != rhs:
                    record("c2'", (x, y, z))
    order = ("f1'", "f2'", "c1'", "c2'", "c3'")
    viols = tuple((k, bad[k]) for k in order if k in bad)
    return CocycleCheck(not viols, viols)


def derived_cocycle_identities(p: SingularPair, c: CocyclePair) -> dict[str, bool]:
    """Consequences of the defining conditions, checked directly:

    * f(x, s(x)) = 1                             ((c3) at a fixed point)
    * f(S1(x,y), S1(S2(x,y),z)) = f(y,z)         ((c3) + (h1))
    * f(x,y) = h(x,y) h(S(x,y))^-1               (f determined by h)
    * abelian targets only: f(tau(x,y)) = f(x,y)^-1
    """
    if not check_nc_cocycle(p, c).ok:
        raise CocycleInvalidError("pair fails the noncommutative conditions")
    n = p.n
    ident, mul, inv, _ = _ops(c.target)
    st = p.biquandle.table
    s1, s2 = st.t1, st.t2
    f, h = c.f, c.h
    smap = p.biquandle.s_map
    report = {
        "f_fixed_point_trivial": all(f[x][smap[x]] == ident for x in range(n)),
        "f_invariance_f2": all(
            f[s1[x][y]][s1[s2[x][y]][z]] == f[y][z]
            for x in range(n) for y in range(n) for z in range(n)),
        "f_determined_by_h": all(
            f[x][y] == mul(h[x][y], inv(h[s1[x][y]][s2[x][y]]))
            for x in range(n) for y in range(n)),
    }
    if _target_abelian(c.target):
        t1, t2 = p.tau.t1, p.tau.t2
        report["abelian_f_tau_inverse"] = all(
            f[t1[x][y]][t2[x][y]] == inv(f[x][y])
            for x in range(n) for y in range(n))
    return report


# ---------------------------------------------------------------------------
# universal cocycles
# ---------------------------------------------------------------------------

def _tables_from_group(n: int, group: AbelianizedGroup):
    f = tuple(tuple(group.generator(f_gen(n, x, y)) for y in range(n))
              for x in range(n))
    h = tuple(tuple(group.generator(h_gen(n, x, y)) for y in range(n))
              for x in range(n))
    return f, h


def universal_nc_cocycle(p: SingularPair) -> CocyclePair:
    """pi_f, pi_h into the abelianization of U_nc^{fh}.

    The full noncommutative universal group has an undecidable word
    problem in general; all values this package computes live in the
    abelianization (or in a user-supplied finite group).
    """
    group = abelianize(build_unc_presentation(p))
    f, h = _tables_from_group(p.n, group)
    return CocyclePair(group, f, h, NC)


def universal_ab_cocycle(p: SingularPair) -> CocyclePair:
    group = abelianize(build_ab_presentation(p))
    f, h = _tables_from_group(p.n, group)
    return CocyclePair(group, f, h, AB)


def _labeled_free_abelian(labels, torsion=(), torsion_labels=()):
    rank = len(labels)

    def free(i):
        return tuple(int(j == i) for j in range(rank)), (0,) * len(torsion)

    def tors(i):
        return (0,) * rank, tuple(int(j == i) for j in range(len(torsion)))

    return rank, free, tors


def builtin_cocycle(pair_name: str, kind: str) -> CocyclePair:
    """Universal cocycles for the worked n=2 examples with the customary
    generator names: a, b, c (and d); torsion generators u1, u2.

    Each table is validated against the corresponding checker, and the
    invariant factors agree with the machine-computed universal group, so
    these are the universal pairs up to relabeling the basis.
    """
    p = builtin_pair(pair_name)
    if pair_name in ("flip-i2", "flip-s2") and kind == NC:
        group = AbelianizedGroup(
            3, (), _coords_flip_i2_nc(), free_labels=("a", "b", "c"))
        f, h = _tables_from_group(2, group)
        c = CocyclePair(group, f, h, NC)
    elif pair_name in ("flip-i2", "flip-s2") and kind == AB:
        group = AbelianizedGroup(
            3, (2, 2), _coords_flip_s2_ab(),
            free_labels=("a", "b", "c"), torsion_labels=("u1", "u2"))
        f, h = _tables_from_group(2, group)
        c = CocyclePair(group, f, h, AB)
    elif pair_name == "flip-flip" and kind == NC:
        group = AbelianizedGroup(
            4, (), _coords_flip_flip_nc(), free_labels=("a", "b", "c", "d"))
        f, h = _tables_from_group(2, group)
        c = CocyclePair(group, f, h, NC)
    elif pair_name == "flip-flip" and kind == AB:
        group = AbelianizedGroup(
            5, (), _coords_flip_flip_ab(),
            free_labels=("f12", "a", "b", "c", "d"))
        f, h = _tables_from_group(2, group)
        c = CocyclePair(group, f, h, AB)
    else:
        c = universal_nc_cocycle(p) if kind == NC else universal_ab_cocycle(p)
    checker = check_nc_cocycle if kind == NC else check_ab_cocycle
    if not checker(p, c).ok:
        raise CocycleInvalidError(f"builtin cocycle {pair_name}/{kind} is broken")
    return c


def _unit(rank, tors_len, free_i=None, tors_i=None, neg_free=None):
    free = [0] * rank
    tors = [0] * tors_len
    if free_i is not None:
        free[free_i] = 1
    if neg_free is not None:
        free[neg_free] -= 1
    if tors_i is not None:
        tors[tors_i] = 1
    return tuple(free), tuple(tors)


def _coords_flip_i2_nc():
    # generators f00,f01,f10,f11,h00,h01,h10,h11; free basis a,b,c
    z = _unit(3, 0)
    a = _unit(3, 0, free_i=0)
    b = _unit(3, 0, free_i=1)
    cc = _unit(3, 0, free_i=2)
    return (z, z, z, z, a, b, b, cc)


def _coords_flip_s2_ab():
    z = _unit(3, 2)
    u1 = _unit(3, 2, tors_i=0)
    u2 = _unit(3, 2, tors_i=1)
    a = _unit(3, 2, free_i=0)
    b = _unit(3, 2, free_i=1)
    cc = _unit(3, 2, free_i=2)
    return (z, u1, u2, z, a, b, b, cc)


def _coords_flip_flip_nc():
    # h generators are the free basis a,b,c,d; f = (1, bc^-1, cb^-1, 1)
    z = _unit(4, 0)
    bc = ((0, 1, -1, 0), ())
    cb = ((0, -1, 1, 0), ())
    a = _unit(4, 0, free_i=0)
    b = _unit(4, 0, free_i=1)
    cc = _unit(4, 0, free_i=2)
    dd = _unit(4, 0, free_i=3)
    return (z, bc, cb, z, a, b, cc, dd)


def _coords_flip_flip_ab():
    # free on f12, h11, h12, h21, h22 with f21 = f12 + h21 - h12
    z = _unit(5, 0)
    f12 = _unit(5, 0, free_i=0)
    f21 = ((1, 0, -1, 1, 0), ())
    a = _unit(5, 0, free_i=1)
    b = _unit(5, 0, free_i=2)
    cc = _unit(5, 0, free_i=3)
    dd = _unit(5, 0, free_i=4)
    return (z, f12, f21, z, a, b, cc, dd)


# ---------------------------------------------------------------------------
# the noncommutative invariant
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NcInvariantValue:
    """Per coloring, a tuple of conjugacy-class representatives indexed by
    component; `multiset` aggregates over colorings."""

    per_coloring: tuple[tuple, ...]

    def multiset(self):
        from collections import Counter
        return Counter(self.per_coloring)

    def sorted_items(self):
        return sorted(self.multiset().items(), key=lambda kv: repr(kv[0]))


def _validate_cocycle(p: SingularPair, c: CocyclePair):
    checker = check_nc_cocycle if c.kind == NC else check_ab_cocycle
    res = checker(p, c)
    if not res.ok:
        raise CocycleInvalidError(
            f"cocycle pair fails {[v[0] for v in res.violations]}")


def nc_invariant(d: SingularDiagram, p: SingularPair,
                 c: CocyclePair) -> NcInvariantValue:
    if c.kind != NC:
        raise CocycleInvalidError("nc_invariant needs a noncommutative pair")
    _validate_cocycle(p, c)
    ident, mul, inv, conj_rep = _ops(c.target)
    sinv = p.biquandle.table.inverse()
    colorings = enumerate_colorings(d, p)
    values = []
    for col in colorings:
        comp_vals = []
        for comp_idx, comp in enumerate(d.components):
            base = d.basepoints[comp_idx]
            if d.consumer(base) is None:      # crossing-free loop
                comp_vals.append(conj_rep(ident))
                continue
            val = ident
            edge = base
            while True:
                ci, slot = d.consumer(edge)
                cr = d.crossings[ci]
                x, y = col[cr.in1], col[cr.in2]
                if cr.kind == SING:
                    val = mul(val, c.h[x][y])
                elif cr.kind == POS and slot == 0:
                    val = mul(val, c.f[x][y])
                elif cr.kind == NEG and slot == 1:
                    a, b = sinv.apply(x, y)
                    val = mul(val, inv(c.f[a][b]))
                edge = cr.out2 if slot == 0 else cr.out1
                if edge == base:
                    break
            comp_vals.append(conj_rep(val))
        values.append(tuple(comp_vals))
    return NcInvariantValue(tuple(values))


def state_sum(d: SingularDiagram, p: SingularPair,
              c: CocyclePair) -> GroupRingElement:
    """Phi_{f,h}(L) = sum over colorings of the unordered product of all
    Boltzmann weights, in Z[H]."""
    if c.kind != AB:
        raise CocycleInvalidError("state_sum needs an abelian pair")
    _validate_cocycle(p, c)
    ident, mul, inv, _ = _ops(c.target)
    sinv = p.biquandle.table.inverse()
    colorings = enumerate_colorings(d, p)
    total = GroupRingElement()
    for col in colorings:
        val = ident
        for cr in d.crossings:
            x, y = col[cr.in1], col[cr.in2]
            if cr.kind == SING:
                w = c.h[x][y]
            elif cr.kind == POS:
                w = c.f[x][y]
            else:
                a, b = sinv.apply(x, y)
                w = inv(c.f[a][b])
            val = mul(val, w)
        total = total + GroupRingElement.of(val)
    return total


def render_laurent(group: AbelianizedGroup, v: GroupRingElement) -> str:
    """Canonical text for a group-ring value over an abelianized target.

    Terms are sorted by (torsion part, exponent vector), descending, so
    example values read like leading-term-first polynomials.
    """
    if not v.terms:
        return "0"
    items = sorted(v.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]),
                   reverse=True)
    parts = []
    for elem, coeff in items:
        mono = group.render_element(elem)
        if mono == "1":
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{abs(coeff)}*{mono}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def compare_cocycle_notions(p: SingularPair, bound: int = 6) -> dict:
    """Experimental: do noncommutative pairs with abelian targets also
    satisfy the abelian conditions?

    Checks the abelianized universal pair and all its pushforwards into
    cyclic groups Z/k for k <= bound.  Reports counterexamples; asserts
    nothing.
    """
    ncp = universal_nc_cocycle(p)
    group: AbelianizedGroup = ncp.target
    checked = []
    counterexamples = []

    def push(hom_free, hom_tors, k):
        def img(elem):
            val = sum(e * hv for e, hv in zip(elem[0], hom_free))
            val += sum(e * hv for e, hv in zip(elem[1], hom_tors))
            return val % k
        tgt = FiniteGroup.cyclic(k)
        f = tuple(tuple(img(v) for v in row) for row in ncp.f)
        h = tuple(tuple(img(v) for v in row) for row in ncp.h)
        return CocyclePair(tgt, f, h, NC)

    # the universal abelianized pair itself
    ab_version = CocyclePair(group, ncp.f, ncp.h, AB)
    ok_ab = check_ab_cocycle(p, ab_version).ok
    checked.append(("universal_abelianized", ok_ab))
    if not ok_ab:
        counterexamples.append("universal_abelianized")
    import itertools
    for k in range(2, bound + 1):
        tors_choices = []
        for dd in group.torsion:
            tors_choices.append([v for v in range(k) if (v * dd) % k == 0])
        free_choices = [range(k)] * group.rank
        for hom in itertools.product(*free_choices, *tors_choices):
            hom_free = hom[:group.rank]
            hom_tors = hom[group.rank:]
            cc = push(hom_free, hom_tors, k)
            if not check_nc_cocycle(p, cc).ok:
                continue
            ab_cc = CocyclePair(cc.target, cc.f, cc.h, AB)
            ok = check_ab_cocycle(p, ab_cc).ok
            name = f"Z/{k} hom {hom}"
            checked.append((name, ok))
            if not ok:
                counterexamples.append(name)
    return {"checked": len(checked), "counterexamples": counterexamples}
