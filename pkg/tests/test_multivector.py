import math
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from teleport_app.algebra import (
    Multivector, blade_product, blade_label, geometric_product, inner_product,
    outer_product, grade_projection, MAX_DIM,
)

B1, B2, B3 = 0b001, 0b010, 0b100

reals = st.floats(min_value=-10, max_value=10)
multivectors = st.lists(reals, min_size=8, max_size=8).map(Multivector)


def slow_blade_product(m1, m2):
    """ 生成元の列を並べ替えて符号を数える (検算用) """
    gens = [k for k in range(16) if m1 >> k & 1] + [k for k in range(16) if m2 >> k & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(gens) - 1):
            if gens[i] > gens[i + 1]:
                gens[i], gens[i + 1] = gens[i + 1], gens[i]
                sign = -sign
                changed = True
            elif gens[i] == gens[i + 1]:
                del gens[i:i + 2]
                changed = True
                break
    return sum(1 << k for k in gens), sign


def vec(*coeffs):
    return Multivector(coeffs)


class BladeProductTest(TestCase):

    def test_unit_square(self):
        self.assertEqual(blade_product(B1, B1, 3), (0, 1))

    def test_anticommute(self):
        self.assertEqual(blade_product(B2, B1, 3), (B1 | B2, -1))
        self.assertEqual(blade_product(B1, B2, 3), (B1 | B2, 1))

    def test_b12_b23(self):
        # b1 b2 b2 b3 = b1 b3
        self.assertEqual(blade_product(B1 | B2, B2 | B3, 3), (B1 | B3, 1))

    def test_matches_reordering(self):
        for m1 in range(16):
            for m2 in range(16):
                self.assertEqual(blade_product(m1, m2, 4), slow_blade_product(m1, m2))

    def test_every_blade_squares_to_scalar(self):
        for m in range(16):
            word, sign = blade_product(m, m, 4)
            g = bin(m).count('1')
            self.assertEqual(word, 0)
            # b_k^2 = +1 でも b1b2 b1b2 = -1
            self.assertEqual(sign, (-1) ** (g * (g - 1) // 2))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            blade_product(8, 1, 3)
        with self.assertRaises(ValueError):
            blade_product(1, -1, 3)

    def test_label(self):
        self.assertEqual(blade_label(0), '1')
        self.assertEqual(blade_label(B1 | B3), 'b13')
        self.assertEqual(blade_label(0b111), 'b123')


class MultivectorTest(TestCase):

    def test_construction_checks(self):
        with self.assertRaises(ValueError):
            Multivector([1.0, 2.0, 3.0])
        with self.assertRaises(ValueError):
            Multivector([1.0])
        with self.assertRaises(ValueError):
            Multivector([1.0, float('nan')])
        with self.assertRaises(ValueError):
            Multivector.zero(MAX_DIM + 1)

    def test_immutable(self):
        mv = Multivector.scalar(1.0, 3)
        with self.assertRaises(ValueError):
            mv.coeffs[0] = 2.0

    def test_dimension_mismatch(self):
        with self.assertRaises(TypeError):
            geometric_product(Multivector.zero(2), Multivector.zero(3))
        with self.assertRaises(TypeError):
            Multivector.zero(2) + Multivector.zero(3)

    def test_operators(self):
        a = vec(1, 2, 0, 0, 0, 0, 0, 0)
        b = vec(0, 1, 1, 0, 0, 0, 0, 0)
        self.assertEqual(a + b, vec(1, 3, 1, 0, 0, 0, 0, 0))
        self.assertEqual(a - b, vec(1, 1, -1, 0, 0, 0, 0, 0))
        self.assertEqual(2 * a, a * 2)
        self.assertEqual(a / 2, vec(0.5, 1, 0, 0, 0, 0, 0, 0))
        self.assertEqual(a * b, geometric_product(a, b))

    def test_repr(self):
        want = 'Multivector(0.6 + 0.8*b3)_Cl3'
        self.assertEqual(repr(vec(0.6, 0, 0, 0, 0.8, 0, 0, 0)), want)


class GeometricProductTest(TestCase):

    def test_teleport_input(self):
        alpha, beta = 0.6, 0.8
        psi1 = vec(alpha, beta, 0, 0, 0, 0, 0, 0)
        phi23 = Multivector.scalar(1.0, 3) + Multivector.blade(B2 | B3, 3)
        got = geometric_product(psi1, phi23 / math.sqrt(2))
        want = vec(alpha, beta, 0, 0, 0, 0, alpha, beta) / math.sqrt(2)
        self.assertTrue(got.allclose(want))

    @given(multivectors)
    def test_scalar_identity(self, a):
        self.assertEqual(geometric_product(a, Multivector.scalar(1.0, 3)), a)

    @settings(max_examples=100, deadline=None)
    @given(multivectors, multivectors, multivectors)
    def test_associative(self, a, b, c):
        left = geometric_product(geometric_product(a, b), c)
        right = geometric_product(a, geometric_product(b, c))
        self.assertLessEqual(left.max_deviation(right), 1e-10)

    def test_generators_exact(self):
        one = Multivector.scalar(1.0, 3)
        for k in range(1, 4):
            bk = Multivector.basis_vector(k, 3)
            self.assertEqual(geometric_product(bk, bk), one)
            for l in range(1, 4):
                if k != l:
                    bl = Multivector.basis_vector(l, 3)
                    self.assertEqual(geometric_product(bk, bl), -geometric_product(bl, bk))

    def test_large_dimension_uses_row_signs(self):
        # 符号表を作らない次元でも結果は同じ規則
        dim = 10
        a = Multivector.blade(0b0110000011, dim)
        b = Multivector.blade(0b1010000110, dim)
        word, sign = slow_blade_product(0b0110000011, 0b1010000110)
        self.assertEqual(geometric_product(a, b), Multivector.blade(word, dim, float(sign)))


class InnerOuterTest(TestCase):

    def test_inner_vectors(self):
        b1 = Multivector.basis_vector(1, 3)
        b2 = Multivector.basis_vector(2, 3)
        self.assertEqual(inner_product(b1, b2), Multivector.zero(3))
        self.assertEqual(inner_product(b1, b1), Multivector.scalar(1.0, 3))
        self.assertEqual(inner_product(b1 + b2, b1), Multivector.scalar(1.0, 3))

    def test_outer_vectors(self):
        b1 = Multivector.basis_vector(1, 3)
        b2 = Multivector.basis_vector(2, 3)
        self.assertEqual(outer_product(b1, b2), Multivector.blade(B1 | B2, 3))
        self.assertEqual(outer_product(b1, b1), Multivector.zero(3))

    def test_mixed_grades_are_symmetrized_products(self):
        # b1 と b2b3 は可換なので反対称化積は0, 対称化積が b1b2b3
        b1 = Multivector.basis_vector(1, 3)
        b23 = Multivector.blade(B2 | B3, 3)
        self.assertEqual(outer_product(b1, b23), Multivector.zero(3))
        self.assertEqual(inner_product(b1, b23), Multivector.blade(0b111, 3))
        # b1 と b1b2 は反可換: b1 (b1b2) = b2
        b12 = Multivector.blade(B1 | B2, 3)
        self.assertEqual(outer_product(b1, b12), Multivector.basis_vector(2, 3))
        self.assertEqual(inner_product(b1, b12), Multivector.zero(3))

    @given(multivectors, multivectors)
    def test_vector_split(self, a, b):
        a, b = a.grade(1), b.grade(1)
        split = inner_product(a, b) + outer_product(a, b)
        self.assertLessEqual(geometric_product(a, b).max_deviation(split), 1e-12)


class GradeProjectionTest(TestCase):

    def test_vector_part(self):
        mv = vec(2.0, 3.0, 0, 5.0, 0, 0, 0, 0)
        self.assertEqual(grade_projection(mv, 1), vec(0, 3.0, 0, 0, 0, 0, 0, 0))
        self.assertEqual(grade_projection(mv, 0), Multivector.scalar(2.0, 3))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            grade_projection(Multivector.zero(3), 4)
        with self.assertRaises(ValueError):
            grade_projection(Multivector.zero(3), -1)

    @given(multivectors)
    def test_reconstruction(self, a):
        total = Multivector.zero(3)
        for g in range(4):
            total = total + grade_projection(a, g)
        np.testing.assert_array_equal(total.coeffs, a.coeffs)
