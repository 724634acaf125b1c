"""Truncated augmentation algebras: bases, normal forms, both products,
and induced maps."""
import pytest
from hypothesis import given, settings, strategies as st

from functorlab.augmentation import AugAlgebra, AugElement, aug_dimension, pushforward
from functorlab.combinatorics import Multiset, binomial
from functorlab.deviations import SampleSpec, is_numerical_degree
from functorlab.intlinalg import Matrix
from functorlab.modules import FreeModule, SetMap, compose, hom, identity_hom


class TestDimensions:
    def test_frozen_counts(self):
        assert aug_dimension(1, 2) == 3
        assert aug_dimension(2, 2) == 6
        assert aug_dimension(3, 3) == 20
        for n in range(4):
            assert aug_dimension(0, n) == 1

    def test_matches_basis_length(self):
        for k in range(4):
            for n in range(4):
                assert AugAlgebra(k, n).dimension() == aug_dimension(k, n)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            AugAlgebra(-1, 2)
        with pytest.raises(ValueError):
            AugAlgebra(2, -1)


class TestNormalForm:
    def test_rank_one_coefficients_are_binomials(self):
        alg = AugAlgebra(1, 2)
        for r in range(-4, 5):
            assert alg.class_of((r,)).to_vector() == (1, r, binomial(r, 2))

    def test_class_of_zero_is_unit(self):
        alg = AugAlgebra(2, 2)
        assert alg.class_of((0, 0)) == alg.one()

    def test_scaling_relation(self):
        # [r z] expands through binomials of the repeated deviation classes
        alg = AugAlgebra(2, 2)
        z = (2, -1)
        for r in range(-3, 4):
            expected = alg.zero()
            for m in range(alg.degree + 1):
                expected = expected + alg.class_of_deviation([z] * m).scale(binomial(r, m))
            assert alg.class_of(tuple(r * c for c in z)) == expected

    def test_deviation_class_of_basis_word_is_basis_element(self):
        alg = AugAlgebra(2, 3)
        X = Multiset.from_indices((0, 0, 1))
        word = [(1, 0), (1, 0), (0, 1)]
        assert alg.class_of_deviation(word) == alg.basis_element(X)

    def test_element_validation(self):
        alg = AugAlgebra(1, 1)
        big = Multiset.from_indices((0, 0, 0))
        with pytest.raises(ValueError):
            alg.element({big: 1})
        with pytest.raises(ValueError):
            alg.from_vector((1, 2, 3, 4))

    def test_vector_round_trip(self):
        alg = AugAlgebra(2, 2)
        u = alg.class_of((3, -2))
        assert alg.from_vector(u.to_vector()) == u


class TestSumProduct:
    @settings(max_examples=60)
    @given(st.tuples(*[st.integers(-3, 3)] * 4))
    def test_defining_identity(self, coords):
        a, b, c, d = coords
        alg = AugAlgebra(2, 2)
        lhs = alg.class_of((a, b)).sum_mul(alg.class_of((c, d)))
        assert lhs == alg.class_of((a + c, b + d))

    def test_unit_commutativity_associativity(self):
        alg = AugAlgebra(2, 2)
        xs = [alg.class_of(v) for v in [(1, 0), (0, 2), (-1, 1)]]
        u = xs[0] - xs[1].scale(2)
        v = xs[2] + alg.one()
        w = xs[1]
        assert u.sum_mul(alg.one()) == u
        assert alg.one().sum_mul(u) == u
        assert u.sum_mul(v) == v.sum_mul(u)
        assert u.sum_mul(v).sum_mul(w) == u.sum_mul(v.sum_mul(w))

    def test_cross_algebra_rejected(self):
        a = AugAlgebra(2, 2)
        b = AugAlgebra(2, 1)
        with pytest.raises(ValueError):
            a.one().sum_mul(b.one())


class TestCompositionProduct:
    def test_defining_identity_seeded(self):
        import random

        rng = random.Random(11)
        alg = AugAlgebra(4, 2)
        for _ in range(8):
            s = Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
            t = Matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
            flat = lambda m: tuple(v for row in m.rows for v in row)
            lhs = alg.class_of(flat(s)).product_mul(alg.class_of(flat(t)))
            assert lhs == alg.class_of(flat(s @ t))

    def test_identity_matrix_class_is_unit(self):
        alg = AugAlgebra(4, 2)
        e = alg.class_of((1, 0, 0, 1))
        u = alg.class_of((2, 1, 0, -1)) - alg.class_of((0, 3, 1, 1)).scale(2)
        assert e.product_mul(u) == u
        assert u.product_mul(e) == u

    def test_associativity(self):
        alg = AugAlgebra(4, 2)
        a = alg.class_of((1, 1, 0, 1))
        b = alg.class_of((2, 0, 1, 1)) + alg.one()
        c = alg.class_of((0, 1, -1, 2))
        assert a.product_mul(b).product_mul(c) == a.product_mul(b.product_mul(c))

    def test_non_square_rank_rejected(self):
        alg = AugAlgebra(3, 2)
        with pytest.raises(ValueError):
            alg.product_mul(alg.one(), alg.one())


class TestPushforward:
    def test_identity_map(self):
        alg = AugAlgebra(2, 2)
        p = pushforward(identity_hom(FreeModule(2)), alg, alg)
        assert p == Matrix.identity(alg.dimension())

    def test_tracks_classes(self):
        src = AugAlgebra(2, 2)
        dst = AugAlgebra(3, 2)
        chi = hom(Matrix([[1, 2], [0, 1], [-1, 3]]))
        p = pushforward(chi, src, dst)
        for x in [(1, 0), (2, -1), (3, 3)]:
            image = chi(chi.source.element(x))
            assert p.matvec(src.class_of(x).to_vector()) == dst.class_of(image).to_vector()

    def test_functoriality(self):
        a, b, c = AugAlgebra(2, 2), AugAlgebra(2, 2), AugAlgebra(1, 2)
        f = hom(Matrix([[1, 1], [0, 2]]))
        g = hom(Matrix([[3, -1]]))
        assert pushforward(compose(g, f), a, c) == pushforward(g, b, c) @ pushforward(f, a, b)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pushforward(identity_hom(FreeModule(2)), AugAlgebra(2, 2), AugAlgebra(2, 1))

    def test_rank_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pushforward(hom(Matrix([[1, 0]])), AugAlgebra(2, 2), AugAlgebra(2, 2))


class TestUniversalMapDegree:
    def test_class_map_is_numerical_of_the_truncation_degree(self):
        for k, n in [(1, 1), (1, 2), (2, 1), (2, 2)]:
            alg = AugAlgebra(k, n)
            target = FreeModule(alg.dimension())
            phi = SetMap(
                alg.module, target, lambda x: target.element(alg.class_of(x).to_vector())
            )
            rep = is_numerical_degree(phi, n, SampleSpec.default_for(alg.module, n))
            assert rep.passed, (k, n, rep.witness)

    def test_and_the_degree_is_sharp(self):
        alg = AugAlgebra(1, 2)
        target = FreeModule(alg.dimension())
        phi = SetMap(
            alg.module, target, lambda x: target.element(alg.class_of(x).to_vector())
        )
        rep = is_numerical_degree(phi, 1, SampleSpec.default_for(alg.module, 1))
        assert not rep.passed


def test_element_json_round_trip():
    from fractions import Fraction

    alg = AugAlgebra(2, 2)
    u = alg.class_of((2, 1)).scale(Fraction(1, 2)) + alg.one()
    again = AugElement.from_json(alg, u.to_json())
    assert again == u
