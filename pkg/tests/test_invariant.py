import pytest

from singlink.coloring import count_colorings
from singlink.diagram import (MOVES, Crossing, SingularDiagram, apply_move,
                              builtin_diagram, find_move_sites)
from singlink.errors import CocycleInvalidError
from singlink.invariant import (AB, NC, CocyclePair, builtin_cocycle,
                                check_ab_cocycle, check_nc_cocycle,
                                compare_cocycle_notions,
                                derived_cocycle_identities, nc_invariant,
                                render_laurent, state_sum,
                                universal_ab_cocycle, universal_nc_cocycle)
from singlink.pairs import SingularPair, builtin_pair, enumerate_taus
from singlink.pairtable import (dihedral_switch, flip_switch, i2_switch,
                                make_quandle_switch, dihedral_quandle)
from singlink.presentation import (AbelianizedGroup, FiniteGroup,
                                   GroupRingElement)


def elem(group, **exps):
    """Build a group element from generator labels, e.g. elem(g, b=2)."""
    free = [0] * group.rank
    tors = [0] * len(group.torsion)
    for label, e in exps.items():
        if label in group.free_labels:
            free[group.free_labels.index(label)] += e
        else:
            tors[group.torsion_labels.index(label)] += e
    tors = [v % d for v, d in zip(tors, group.torsion)]
    return (tuple(free), tuple(tors))


class TestCheckers:
    def test_universal_pairs_pass(self, test_pairs):
        for name, p in test_pairs.items():
            assert check_nc_cocycle(p, universal_nc_cocycle(p)).ok, name
            assert check_ab_cocycle(p, universal_ab_cocycle(p)).ok, name

    def test_trivial_pair_passes(self):
        p = builtin_pair("d3-ss")
        tgt = FiniteGroup.cyclic(1)
        z = ((0,) * 3,) * 3
        assert check_nc_cocycle(p, CocyclePair(tgt, z, z, NC)).ok

    def test_c1_violation_witnessed(self):
        # quandle pair with f = 1: condition (c1) reads h(x<|z, y<|z) = h(x,y);
        # break it with an h that is not constant on a <|-orbit
        p = builtin_pair("d3-ss")
        tgt = FiniteGroup.cyclic(3)
        f = ((0,) * 3,) * 3
        h = ((0, 1, 2), (0, 1, 2), (0, 1, 2))
        res = check_nc_cocycle(p, CocyclePair(tgt, f, h, NC))
        assert not res.ok
        assert any(v[0] == "c1" for v in res.violations)

    def test_ff_pair_on_SS_is_abelian_cocycle(self):
        # a type-I biquandle 2-cocycle f gives the abelian pair (f, f) on
        # (X, S, S); realize f as the f-part of the universal abelian pair
        p = builtin_pair("d3-ss")
        u = universal_ab_cocycle(p)
        cc = CocyclePair(u.target, u.f, u.f, AB)
        assert check_ab_cocycle(p, cc).ok

    def test_f_finv_pair_on_S_Sinv(self):
        # f with f o S = f gives (f, f^-1) on (X, S, S^-1); take f constant
        bi = dihedral_switch(3)
        p = SingularPair(bi, bi.table.inverse())
        tgt = FiniteGroup.cyclic(4)
        f = ((1,) * 3,) * 3
        # (f2') demands f(x, s(x)) = 1: constant f fails it, so repair the
        # diagonal; instead use f = 0 except... simplest honest instance:
        # f identically 0 and h = -f = 0 works but is trivial; use the
        # universal f pushed along a hom to keep the test meaningful
        u = universal_ab_cocycle(p)
        g: AbelianizedGroup = u.target

        def push(e):
            return (sum(e[0]) * 2) % 4          # some hom Z^rank -> Z/4

        okf = all(push(g.mul(u.f[x][y], g.inv(u.f[bi.table.t1[x][y]][bi.table.t2[x][y]])))
                  == 0 for x in range(3) for y in range(3))
        f = tuple(tuple(push(v) for v in row) for row in u.f)
        h = tuple(tuple((-v) % 4 for v in row) for row in f)
        if okf:
            cc = CocyclePair(FiniteGroup.cyclic(4), f, h, AB)
            assert check_ab_cocycle(p, cc).ok

    def test_dimension_mismatch(self):
        from singlink.errors import DimensionMismatchError
        p = builtin_pair("flip-i2")
        tgt = FiniteGroup.cyclic(2)
        z3 = ((0,) * 3,) * 3
        with pytest.raises(DimensionMismatchError):
            check_nc_cocycle(p, CocyclePair(tgt, z3, z3, NC))


class TestBuiltinCocyclesAreUniversal:
    def test_invariant_factors_match_machine_computation(self):
        # a labeled pair that passes the checker induces a surjection from
        # the universal group; equal invariant factors then force an
        # isomorphism (finitely generated abelian groups are Hopfian)
        for name, kind in (("flip-i2", NC), ("flip-s2", AB),
                           ("flip-flip", NC), ("flip-flip", AB)):
            p = builtin_pair(name)
            labeled = builtin_cocycle(name, kind)
            machine = (universal_nc_cocycle(p) if kind == NC
                       else universal_ab_cocycle(p))
            lg, mg = labeled.target, machine.target
            assert (lg.rank, tuple(lg.torsion)) == (mg.rank, tuple(mg.torsion))

    def test_labeled_generators_span(self):
        from singlink.presentation import smith_normal_form
        for name, kind in (("flip-i2", NC), ("flip-s2", AB),
                           ("flip-flip", NC), ("flip-flip", AB)):
            g = builtin_cocycle(name, kind).target
            free_rows = [list(g.generator(i)[0]) for i in range(8)]
            _, D, _ = smith_normal_form(free_rows)
            diag = [D[i][i] for i in range(min(len(D), g.rank))]
            assert diag == [1] * g.rank
            for i in range(len(g.torsion)):
                unit = ((0,) * g.rank,
                        tuple(int(j == i) for j in range(len(g.torsion))))
                assert any(g.generator(k) == unit for k in range(8))


class TestDerivedIdentities:
    def test_universal_flip_i2(self):
        p = builtin_pair("flip-i2")
        rep = derived_cocycle_identities(p, builtin_cocycle("flip-i2", NC))
        assert all(rep.values())

    def test_h_trivial_forces_f_trivial(self):
        # with h = 1 the relation f = h h(S)^-1 collapses f to 1
        p = builtin_pair("flip-flip")
        tgt = FiniteGroup.cyclic(5)
        z = ((0, 0), (0, 0))
        rep = derived_cocycle_identities(p, CocyclePair(tgt, z, z, NC))
        assert rep["f_determined_by_h"]

    def test_abelian_f_tau_inverse(self, test_pairs):
        for name, p in test_pairs.items():
            rep = derived_cocycle_identities(p, builtin_cocycle(name, NC))
            assert rep["abelian_f_tau_inverse"], name

    def test_enumerated_n2_pairs(self):
        # every singular pair on a 2-element biquandle: Lemma-consequences
        # hold for the universal abelianized cocycle
        import itertools
        from singlink.pairtable import Biquandle, PairTable, check_biquandle
        perms = list(itertools.permutations(range(2)))
        biquandles = []
        for rows in itertools.product(perms, repeat=2):
            for cols in itertools.product(perms, repeat=2):
                t2 = tuple(tuple(cols[y][x] for y in range(2)) for x in range(2))
                t = PairTable(2, rows, t2)
                s = check_biquandle(t)
                if s is not None:
                    biquandles.append(Biquandle(t, s))
        assert len(biquandles) >= 2
        count = 0
        for bi in biquandles:
            for tau in enumerate_taus(bi):
                p = SingularPair(bi, tau)
                rep = derived_cocycle_identities(p, universal_nc_cocycle(p))
                assert all(rep.values()), (bi.table, tau)
                count += 1
        assert count >= 4


class TestNcInvariant:
    def test_sing_trefoil_b_squared(self):
        p = builtin_pair("flip-i2")
        c = builtin_cocycle("flip-i2", NC)
        g = c.target
        v = nc_invariant(builtin_diagram("sing_trefoil"), p, c)
        b2 = elem(g, b=2)
        assert v.per_coloring and all(t == (b2,) for t in v.per_coloring)

    def test_fig8_trefoil_b_squared(self):
        p = builtin_pair("flip-i2")
        c = builtin_cocycle("flip-i2", NC)
        v = nc_invariant(builtin_diagram("sing_trefoil_fig8"), p, c)
        b2 = elem(c.target, b=2)
        assert all(t == (b2,) for t in v.per_coloring)

    def test_four_sing_right_cab2(self):
        p = builtin_pair("flip-i2")
        c = builtin_cocycle("flip-i2", NC)
        v = nc_invariant(builtin_diagram("four_sing_right"), p, c)
        cab2 = elem(c.target, c=1, a=1, b=2)
        assert len(v.per_coloring) == 4
        assert all(t == (cab2, cab2) for t in v.per_coloring)

    def test_four_sing_left_multiset(self):
        p = builtin_pair("flip-i2")
        c = builtin_cocycle("flip-i2", NC)
        v = nc_invariant(builtin_diagram("four_sing_left"), p, c)
        ca2 = elem(c.target, c=2, a=2)
        b4 = elem(c.target, b=4)
        ms = v.multiset()
        assert ms[(ca2, ca2)] == 2
        assert ms[(b4, b4)] == 2

    def test_linking_number_interpretation(self):
        # S = tau = flip, f = 1, h symmetric on free(a, b, c):
        # per component, the a-exponent doubles the self-intersections of
        # component 1 and the c-exponent counts the mutual ones
        p = builtin_pair("flip-flip")
        g = AbelianizedGroup(3, (), (
            ((0, 0, 0), ()),) * 4 + (
            ((1, 0, 0), ()),       # h(0,0) = a
            ((0, 0, 1), ()),       # h(0,1) = c
            ((0, 0, 1), ()),       # h(1,0) = c
            ((0, 1, 0), ())),      # h(1,1) = b
            free_labels=("a", "b", "c"))
        f = ((g.identity(),) * 2,) * 2
        h = ((g.generator(4), g.generator(5)), (g.generator(6), g.generator(7)))
        c = CocyclePair(g, f, h, NC)
        assert check_nc_cocycle(p, c).ok
        # component A passes one singular self-crossing K (twice) and two
        # mutual crossings; component B passes only the mutual ones
        d = SingularDiagram((
            Crossing("s", ("a0", "a2", "a3", "a1")),    # K, self on A
            Crossing("s", ("a1", "b0", "b1", "a2")),    # M1
            Crossing("s", ("a3", "b1", "b0", "a0")),    # M2
        ))
        assert len(d.components) == 2
        v = nc_invariant(d, p, c)
        # the coloring A = 0, B = 1 contributes (a^2 c^2, c^2): the
        # a-exponent doubles A's self-intersections, c counts mutual ones
        a2c2 = elem(g, a=2, c=2)
        c2 = elem(g, c=2)
        assert (a2c2, c2) in v.per_coloring
        # a single singular kink likewise doubles the self-intersection
        kink = SingularDiagram((Crossing("s", ("e0", "l", "e0", "l")),))
        vk = nc_invariant(kink, p, c)
        a2 = elem(g, a=2)
        b2 = elem(g, b=2)
        assert sorted(vk.per_coloring) == sorted([(a2,), (b2,)])

    def test_basepoint_independence_abelian(self):
        p = builtin_pair("flip-i2")
        c = builtin_cocycle("flip-i2", NC)
        d = builtin_diagram("four_sing_right")
        base = nc_invariant(d, p, c).multiset()
        for e in d.components[0]:
            d2 = SingularDiagram(d.crossings, d.loops, (e, d.basepoints[1]))
            assert nc_invariant(d2, p, c).multiset() == base

    def test_basepoint_independence_nonabelian(self):
        # symmetric h into S3 on (flip, flip): non-commuting weights, the
        # conjugacy class representative does not depend on the basepoint
        p = builtin_pair("flip-flip")
        tgt = FiniteGroup.symmetric(3)
        e = tgt.identity()
        g1, g2 = 1, 4
        f = ((e, e), (e, e))
        h = ((g1, tgt.mul(g1, g2)), (tgt.mul(g1, g2), g2))
        c = CocyclePair(tgt, f, h, NC)
        assert check_nc_cocycle(p, c).ok
        d = builtin_diagram("four_sing_left")
        base = nc_invariant(d, p, c).multiset()
        for e0 in d.components[0]:
            for e1 in d.components[1]:
                d2 = SingularDiagram(d.crossings, d.loops, (e0, e1))
                assert nc_invariant(d2, p, c).multiset() == base

    def test_mirror_sensitivity(self):
        p = builtin_pair("d3-ss")
        c = universal_nc_cocycle(p)
        v1 = nc_invariant(builtin_diagram("sing_trefoil"), p, c)
        v2 = nc_invariant(builtin_diagram("sing_trefoil_mirror"), p, c)
        c1 = count_colorings(builtin_diagram("sing_trefoil"), p)
        c2 = count_colorings(builtin_diagram("sing_trefoil_mirror"), p)
        assert (c1 != c2) == (v1.multiset() != v2.multiset())
        assert c1 == 9 and c2 == 3

    def test_invalid_cocycle_rejected(self):
        p = builtin_pair("flip-i2")
        tgt = FiniteGroup.cyclic(3)
        f = ((0, 0), (0, 0))
        h = ((0, 1), (2, 0))      # breaks h symmetry required by (c3)
        with pytest.raises(CocycleInvalidError):
            nc_invariant(builtin_diagram("unknot"), p,
                         CocyclePair(tgt, f, h, NC))


class TestStateSum:
    def test_four_sing_right(self):
        p = builtin_pair("flip-s2")
        c = builtin_cocycle("flip-s2", AB)
        v = state_sum(builtin_diagram("four_sing_right"), p, c)
        g = c.target
        expected = GroupRingElement([(elem(g, a=1, b=2, c=1), 4)])
        assert v == expected
        assert render_laurent(g, v) == "4*a*b^2*c"

    def test_four_sing_left(self):
        p = builtin_pair("flip-s2")
        c = builtin_cocycle("flip-s2", AB)
        v = state_sum(builtin_diagram("four_sing_left"), p, c)
        g = c.target
        expected = GroupRingElement([(elem(g, a=2, c=2), 2), (elem(g, b=4), 2)])
        assert v == expected
        assert render_laurent(g, v) == "2*a^2*c^2 + 2*b^4"

    def test_flip_flip_does_not_distinguish(self):
        p = builtin_pair("flip-flip")
        c = builtin_cocycle("flip-flip", AB)
        left = state_sum(builtin_diagram("four_sing_left"), p, c)
        right = state_sum(builtin_diagram("four_sing_right"), p, c)
        assert left == right

    def test_unknot_counts_X(self, test_pairs, ab_cocycles):
        for name, p in test_pairs.items():
            c = ab_cocycles[name]
            v = state_sum(builtin_diagram("unknot"), p, c)
            ident = (c.target.identity() if isinstance(c.target, AbelianizedGroup)
                     else c.target.identity())
            assert v == GroupRingElement([(ident, p.n)])

    def test_coefficient_sum_is_coloring_count(self, all_diagrams, test_pairs,
                                               ab_cocycles):
        for dname, d in all_diagrams.items():
            for pname, p in test_pairs.items():
                v = state_sum(d, p, ab_cocycles[pname])
                assert v.coefficient_sum() == count_colorings(d, p), \
                    (dname, pname)

    def test_sing_to_pos_replacement_with_ff_cocycle(self):
        # on (X, S, S) with the abelian pair (f, f), the singular state sum
        # equals the classical state sum of the Pos-replaced diagram
        from tests.test_coloring import replace_sing_by_pos
        p = builtin_pair("d3-ss")
        u = universal_ab_cocycle(p)
        ff = CocyclePair(u.target, u.f, u.f, AB)
        assert check_ab_cocycle(p, ff).ok
        for name in ("sing_trefoil", "sing_hopf", "four_sing_left"):
            d = builtin_diagram(name)
            assert state_sum(d, p, ff) == state_sum(replace_sing_by_pos(d), p, ff), name

    def test_render_identity_coefficient(self):
        p = builtin_pair("flip-s2")
        c = builtin_cocycle("flip-s2", AB)
        g = c.target
        assert render_laurent(g, GroupRingElement([(g.identity(), 3)])) == "3"

    def test_render_torsion(self):
        p = builtin_pair("flip-s2")
        g = builtin_cocycle("flip-s2", AB).target
        v = GroupRingElement([(elem(g, u1=1), 2), (g.identity(), 2)])
        assert render_laurent(g, v) == "2*u1 + 2"


def nc_multiset_unordered(value):
    """Multiset over colorings of component values up to component
    permutation: moves rename edges, so component indices (assigned by
    smallest edge token) are a presentation artifact, not invariant data."""
    from collections import Counter
    return Counter(tuple(sorted(map(repr, t))) for t in value.per_coloring)


class TestReidemeisterInvariance:
    def test_all_builtin_sites(self, all_diagrams, test_pairs, nc_cocycles,
                               ab_cocycles):
        for dname, d in all_diagrams.items():
            for move in MOVES:
                for site in find_move_sites(d, move):
                    d2 = apply_move(d, site)
                    for pname, p in test_pairs.items():
                        v1 = nc_multiset_unordered(nc_invariant(d, p, nc_cocycles[pname]))
                        v2 = nc_multiset_unordered(nc_invariant(d2, p, nc_cocycles[pname]))
                        assert v1 == v2, (dname, move, site, pname, "nc")
                        s1 = state_sum(d, p, ab_cocycles[pname])
                        s2 = state_sum(d2, p, ab_cocycles[pname])
                        assert s1 == s2, (dname, move, site, pname, "ab")


class TestCompareNotions:
    def test_flip_flip_report(self):
        rep = compare_cocycle_notions(builtin_pair("flip-flip"), bound=3)
        assert rep["checked"] >= 1
        assert isinstance(rep["counterexamples"], list)

    def test_trivial_pair(self):
        rep = compare_cocycle_notions(builtin_pair("trivial-1"), bound=3)
        assert rep["counterexamples"] == []

    def test_symmetric_h_satisfies_both(self):
        p = builtin_pair("flip-flip")
        tgt = FiniteGroup.cyclic(6)
        e = 0
        f = ((e, e), (e, e))
        h = ((1, 5), (5, 3))
        nc = CocyclePair(tgt, f, h, NC)
        ab = CocyclePair(tgt, f, h, AB)
        assert check_nc_cocycle(p, nc).ok
        assert check_ab_cocycle(p, ab).ok
