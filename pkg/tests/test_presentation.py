import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlink.errors import NotInvolutiveError
from singlink.pairs import SingularPair, builtin_pair, enumerate_taus
from singlink.pairtable import (dihedral_switch, flip_switch, i2_switch,
                                make_bialexander)
from singlink.presentation import (AbelianizedGroup, FiniteGroup,
                                   GroupRingElement, Presentation, abelianize,
                                   build_ab_presentation,
                                   build_unc_presentation,
                                   equivalence_classes_involutive, f_gen,
                                   h_gen, smith_normal_form)


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


def det(M):
    M = [row[:] for row in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def assert_snf_postconditions(M):
    r, c = len(M), len(M[0])
    U, D, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == D
    for i in range(r):
        for j in range(c):
            if i != j:
                assert D[i][j] == 0
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1


class TestSmithNormalForm:
    def test_diag_2_3(self):
        _, D, _ = smith_normal_form([[2, 0], [0, 3]])
        assert [D[0][0], D[1][1]] == [1, 6]

    def test_zero(self):
        U, D, V = smith_normal_form([[0, 0], [0, 0]])
        assert D == [[0, 0], [0, 0]]
        assert U == [[1, 0], [0, 1]] and V == [[1, 0], [0, 1]]

    def test_identity(self):
        _, D, _ = smith_normal_form([[1, 0], [0, 1]])
        assert D == [[1, 0], [0, 1]]

    def test_random_matrices(self):
        rng = random.Random(20240)
        for _ in range(150):
            r = rng.randint(1, 7)
            c = rng.randint(1, 7)
            M = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            assert_snf_postconditions(M)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.lists(st.integers(-9, 9), min_size=1, max_size=5),
                    min_size=1, max_size=5).filter(
                        lambda rows: len({len(r) for r in rows}) == 1))
    def test_hypothesis_matrices(self, M):
        assert_snf_postconditions(M)


class TestPresentations:
    def test_relation_instantiation_counts(self):
        p = builtin_pair("flip-i2")
        pres = build_unc_presentation(p)
        # 5 triple families + 2 pair families, minus reduced duplicates
        assert pres.kind == "nc"
        assert all(all(0 <= g < 8 for g, _ in w) for w in pres.relations)
        pres_ab = build_ab_presentation(p)
        assert pres_ab.kind == "ab"

    def test_unc_flip_i2(self):
        g = abelianize(build_unc_presentation(builtin_pair("flip-i2")))
        assert (g.rank, g.torsion) == (3, ())
        n = 2
        for x in range(n):
            for y in range(n):
                assert g.generator(f_gen(n, x, y)) == g.identity()
        assert g.generator(h_gen(n, 0, 1)) == g.generator(h_gen(n, 1, 0))
        basis = [g.generator(h_gen(n, 0, 0))[0],
                 g.generator(h_gen(n, 0, 1))[0],
                 g.generator(h_gen(n, 1, 1))[0]]
        assert abs(det([list(b) for b in basis])) == 1

    def test_unc_flip_flip(self):
        g = abelianize(build_unc_presentation(builtin_pair("flip-flip")))
        assert (g.rank, g.torsion) == (4, ())
        n = 2
        ident = g.identity()
        assert g.generator(f_gen(n, 0, 0)) == ident
        assert g.generator(f_gen(n, 1, 1)) == ident
        b = g.generator(h_gen(n, 0, 1))
        c = g.generator(h_gen(n, 1, 0))
        assert g.generator(f_gen(n, 0, 1)) == g.mul(b, g.inv(c))
        assert g.generator(f_gen(n, 1, 0)) == g.mul(c, g.inv(b))
        basis = [list(g.generator(h_gen(n, x, y))[0])
                 for x in range(n) for y in range(n)]
        assert abs(det(basis)) == 1

    def test_ab_flip_s2(self):
        g = abelianize(build_ab_presentation(builtin_pair("flip-s2")))
        assert (g.rank, tuple(g.torsion)) == (3, (2, 2))
        n = 2
        ident = g.identity()
        assert g.generator(f_gen(n, 0, 0)) == ident
        assert g.generator(f_gen(n, 1, 1)) == ident
        u1 = g.generator(f_gen(n, 0, 1))
        u2 = g.generator(f_gen(n, 1, 0))
        assert u1[0] == (0, 0, 0) and u2[0] == (0, 0, 0)
        assert sorted((u1[1], u2[1])) == [(0, 1), (1, 0)]
        assert g.generator(h_gen(n, 0, 1)) == g.generator(h_gen(n, 1, 0))
        basis = [list(g.generator(h_gen(n, x, y))[0])
                 for (x, y) in ((0, 0), (0, 1), (1, 1))]
        assert abs(det(basis)) == 1

    def test_involutive_pair_i2(self):
        g = abelianize(build_unc_presentation(builtin_pair("i2-ss")))
        assert (g.rank, g.torsion) == (2, ())
        n = 2
        assert g.generator(h_gen(n, 0, 0)) == g.generator(h_gen(n, 1, 1))
        assert g.generator(h_gen(n, 0, 1)) == g.generator(h_gen(n, 1, 0))
        for x in range(2):
            for y in range(2):
                assert g.generator(f_gen(n, x, y)) == g.identity()

    def test_trivial_n1(self):
        p = builtin_pair("trivial-1")
        g = abelianize(build_unc_presentation(p))
        assert (g.rank, g.torsion) == (1, ())
        assert g.generator(0) == g.identity()          # f forced trivial
        assert g.generator(1) != g.identity()          # h free
        g2 = abelianize(build_ab_presentation(p))
        assert (g2.rank, g2.torsion) == (1, ())

    def test_abelianize_invariant_under_row_shuffle_and_signs(self):
        pres = build_unc_presentation(builtin_pair("flip-i2"))
        g = abelianize(pres)
        rng = random.Random(5)
        rels = list(pres.relations)
        rng.shuffle(rels)
        rels = [tuple((gen, -e) for gen, e in w) if rng.random() < 0.5 else w
                for w in rels]
        g2 = abelianize(Presentation(pres.n, pres.kind, tuple(rels)))
        assert (g.rank, g.torsion) == (g2.rank, g2.torsion)
        # kernel agreement on sample words
        words = [((0, 1), (1, 1)), ((4, 1), (5, -1)), ((4, 1), (7, 1)),
                 ((5, 1), (6, -1)), ((1, 2), (2, 2))]
        for w in words:
            assert (g.normal_form(w) == g.identity()) == \
                (g2.normal_form(w) == g2.identity())


class TestNormalForm:
    def test_empty_word(self):
        g = abelianize(build_unc_presentation(builtin_pair("flip-i2")))
        assert g.normal_form(()) == g.identity()

    def test_relation_words_die(self):
        pres = build_unc_presentation(builtin_pair("flip-flip"))
        g = abelianize(pres)
        for w in pres.relations:
            assert g.normal_form(w) == g.identity()

    def test_f12_f21_cancel_in_flip_flip(self):
        n = 2
        g = abelianize(build_unc_presentation(builtin_pair("flip-flip")))
        w = ((f_gen(n, 0, 1), 1), (f_gen(n, 1, 0), 1))
        assert g.normal_form(w) == g.identity()

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 7), st.integers(-3, 3)),
                    max_size=8))
    def test_homomorphism_property(self, word):
        g = abelianize(build_unc_presentation(builtin_pair("flip-i2")))
        w1 = tuple(word[: len(word) // 2])
        w2 = tuple(word[len(word) // 2:])
        assert g.normal_form(w1 + w2) == g.mul(g.normal_form(w1),
                                               g.normal_form(w2))


class TestUniversality:
    def _check_kills_relations(self, pres, target, images):
        for w in pres.relations:
            val = target.identity()
            for gen, e in w:
                x = images[gen]
                if e < 0:
                    x = target.inv(x)
                for _ in range(abs(e)):
                    val = target.mul(val, x)
            assert val == target.identity()

    def test_concrete_cyclic_cocycle(self):
        # push the universal abelianized pair into Z/4 along a homomorphism
        p = builtin_pair("flip-i2")
        pres = build_unc_presentation(p)
        g = abelianize(pres)
        tgt = FiniteGroup.cyclic(4)
        hom_free = (1, 2, 3)

        def img(gen):
            free, tors = g.generator(gen)
            return sum(e * hv for e, hv in zip(free, hom_free)) % 4

        images = {gen: img(gen) for gen in range(8)}
        self._check_kills_relations(pres, tgt, images)

    def test_symmetric_h_into_s3(self):
        # S = tau = flip, f = 1, h symmetric: a cocycle into any group
        p = builtin_pair("flip-flip")
        pres = build_unc_presentation(p)
        tgt = FiniteGroup.symmetric(3)
        e = tgt.identity()
        g1, g2 = 1, 2          # arbitrary elements
        images = {f_gen(2, x, y): e for x in range(2) for y in range(2)}
        images[h_gen(2, 0, 0)] = g1
        images[h_gen(2, 1, 1)] = g2
        images[h_gen(2, 0, 1)] = images[h_gen(2, 1, 0)] = tgt.mul(g1, g2)
        self._check_kills_relations(pres, tgt, images)

    def test_functoriality_swap_automorphism(self):
        # the transposition is an automorphism of (flip, i2); the induced
        # generator substitution preserves every relation
        p = builtin_pair("flip-i2")
        g = (1, 0)
        q = p.relabel(list(g))
        assert q.key() == p.key()
        pres = build_unc_presentation(p)
        grp = abelianize(pres)
        n = 2

        def mapped(gen):
            base = gen % (n * n)
            x, y = divmod(base, n)
            idx = g[x] * n + g[y]
            return idx if gen < n * n else n * n + idx

        for w in pres.relations:
            image_word = tuple((mapped(gen), e) for gen, e in w)
            assert grp.normal_form(image_word) == grp.identity()


class TestEquivalenceClasses:
    def test_flip_singletons(self):
        assert len(equivalence_classes_involutive(flip_switch(2).table)) == 4

    def test_i2_pairs(self):
        classes = equivalence_classes_involutive(i2_switch().table)
        assert classes == [((0, 0), (1, 1)), ((0, 1), (1, 0))]

    def test_not_involutive(self):
        with pytest.raises(NotInvolutiveError):
            equivalence_classes_involutive(dihedral_switch(3).table)

    def test_class_count_equals_rank(self):
        for bi in (flip_switch(2), flip_switch(3), i2_switch()):
            classes = equivalence_classes_involutive(bi.table)
            g = abelianize(build_unc_presentation(SingularPair(bi, bi.table)))
            assert len(classes) == g.rank
            assert g.torsion == ()


class TestGroupRing:
    def test_zero_coefficients_dropped(self):
        e1 = GroupRingElement([(("x",), 1), (("x",), -1)])
        assert e1.terms == {}

    def test_addition(self):
        a = GroupRingElement([(("a",), 2)])
        b = GroupRingElement([(("a",), 1), (("b",), 3)])
        assert (a + b).terms == {("a",): 3, ("b",): 3}

    def test_coefficient_sum(self):
        a = GroupRingElement([(("a",), 2), (("b",), 5)])
        assert a.coefficient_sum() == 7


class TestFiniteGroup:
    def test_cyclic(self):
        g = FiniteGroup.cyclic(5)
        assert g.identity() == 0
        assert g.mul(3, 4) == 2
        assert g.inv(2) == 3
        assert g.is_abelian()

    def test_symmetric_3(self):
        g = FiniteGroup.symmetric(3)
        assert g.order == 6
        assert not g.is_abelian()
        # conjugacy class representative is constant on classes
        for a in range(6):
            ra = g.conjugacy_class_rep(a)
            for c in range(6):
                conj = g.mul(g.mul(c, a), g.inv(c))
                assert g.conjugacy_class_rep(conj) == ra

    def test_bad_table_rejected(self):
        with pytest.raises(ValueError):
            FiniteGroup(2, ((0, 1), (1, 1)))
