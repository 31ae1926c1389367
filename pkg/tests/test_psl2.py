from cmath import exp, pi
from unittest import TestCase, main

import numpy as np

from ftype.errors import DegeneratePolynomialError, EvaluationError, SingularMatrixError
from ftype.psl2 import IDENTITY, LaurentMatrix, LaurentPolynomial, ProjectiveMatrix, commutator_trace, \
    elliptic_trace, evaluate, has_order, inv, is_irreducible_pair, mul, order_margins, power, solve_on_target, trace


class TestProjectiveMatrix(TestCase):
    def test_normalized(self):
        m = ProjectiveMatrix.of(2, 0, 0, 8)
        self.assertAlmostEqual(m.det_residual, 0)
        self.assertAlmostEqual(abs(trace(m)), 2.5)

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            ProjectiveMatrix.of(1, 2, 2, 4)
        with self.assertRaises(SingularMatrixError):
            ProjectiveMatrix.of(float('nan'), 0, 0, 1)
        # singular relative to the size of the entries
        with self.assertRaises(SingularMatrixError):
            ProjectiveMatrix.of(1e10, 1e10, 1e10, 1e10 + 1e-5)

    def test_products_of_large_matrices(self):
        x = ProjectiveMatrix.of(3, 1, 2, 1)
        y = ProjectiveMatrix.of(1, 2, 1, 3)
        big = power(mul(x, y), 12)
        self.assertGreater(np.abs(big.entries).max(), 1e8)
        bigger = mul(big, power(y, 9))
        self.assertTrue(np.isfinite(commutator_trace(bigger, big)))
        self.assertTrue(np.isfinite(commutator_trace(inv(bigger), x)))
        # the lift of a product is the product of the lifts
        self.assertTrue(np.allclose(mul(x, y).entries, x.entries @ y.entries))

    def test_distance_modulo_sign(self):
        m = ProjectiveMatrix.of(1, 1, 0, 1)
        minus = ProjectiveMatrix(-m.entries)
        self.assertAlmostEqual(m.distance(minus), 0)
        self.assertTrue(ProjectiveMatrix.of(-1, 0, 0, -1).is_identity(1e-12))

    def test_group_operations(self):
        x = ProjectiveMatrix.of(2, 1, 1, 1)
        y = ProjectiveMatrix.of(1, 3, 0, 1)
        self.assertTrue(mul(x, inv(x)).is_identity(1e-12))
        self.assertTrue((x @ y @ ~y).equals(x, 1e-12))
        self.assertTrue(power(x, -2).equals(inv(mul(x, x)), 1e-12))
        self.assertTrue(power(x, 0).is_identity(1e-12))
        g = ProjectiveMatrix.diagonal(2)
        self.assertTrue(x.conjugate_by(g).equals(g @ x @ ~g, 1e-12))

    def test_to_json(self):
        found = ProjectiveMatrix.diagonal(1j).to_json()
        self.assertEqual(len(found['entries']), 4)
        self.assertLess(found['det_residual'], 1e-12)


class TestOrders(TestCase):
    def test_rotations(self):
        for m in (2, 3, 5, 8):
            with self.subTest(m=m):
                r = ProjectiveMatrix.rotation(m)
                self.assertAlmostEqual(abs(trace(r)), abs(elliptic_trace(m)))
                self.assertTrue(has_order(r, m, 1e-9))
                self.assertFalse(has_order(r, 2 * m, 1e-9))

    def test_order_margins(self):
        reached, nearest = order_margins(ProjectiveMatrix.rotation(3), 3)
        self.assertLess(reached, 1e-12)
        self.assertGreater(nearest, 0.5)

    def test_parabolic_has_no_order(self):
        parabolic = ProjectiveMatrix.of(1, 1, 0, 1)
        for m in range(1, 6):
            self.assertFalse(has_order(parabolic, m, 1e-9))

    def test_invalid_order(self):
        with self.assertRaises(ValueError):
            has_order(IDENTITY, 0, 1e-9)

    def test_elliptic_trace(self):
        self.assertAlmostEqual(elliptic_trace(2), 0)
        self.assertAlmostEqual(elliptic_trace(3), 1)
        self.assertAlmostEqual(elliptic_trace(6, 2), 1)


class TestCommutators(TestCase):
    def test_commuting_pair(self):
        x = ProjectiveMatrix.diagonal(2)
        y = ProjectiveMatrix.diagonal(3)
        self.assertAlmostEqual(commutator_trace(x, y), 2)
        self.assertFalse(is_irreducible_pair(x, y, 1e-6))

    def test_common_fixed_point(self):
        x = ProjectiveMatrix.diagonal(2)
        self.assertAlmostEqual(commutator_trace(x, ProjectiveMatrix.of(1, 1, 0, 1)), 2)

    def test_irreducible(self):
        # tr[x, y] = 2 - (s - 1/s)^2 for x = diag(s, 1/s), y = ((1, 1), (1, 2))
        x = ProjectiveMatrix.diagonal(2)
        y = ProjectiveMatrix.of(1, 1, 1, 2)
        self.assertAlmostEqual(commutator_trace(x, y), -0.25)
        self.assertTrue(is_irreducible_pair(x, y, 1e-6))


class TestLaurent(TestCase):
    t = LaurentPolynomial.monomial(1, 1)
    t_inverse = LaurentPolynomial.monomial(1, -1)

    def test_arithmetic(self):
        f = self.t + self.t_inverse
        self.assertEqual(f * f, LaurentPolynomial({2: 1, 0: 2, -2: 1}))
        self.assertEqual(f - self.t, self.t_inverse)
        self.assertTrue((f - f).is_zero)
        self.assertEqual(self.t * self.t_inverse, 1)
        self.assertEqual((f.min_degree, f.max_degree), (-1, 1))

    def test_negligible_coefficients_dropped(self):
        self.assertEqual(LaurentPolynomial({3: 1e-20, 1: 2}).coefficients, {1: 2})

    def test_evaluate(self):
        f = 3 * self.t + self.t_inverse
        self.assertAlmostEqual(evaluate(f, 2), 6.5)
        self.assertAlmostEqual(f(1j), 3j - 1j)
        self.assertAlmostEqual(evaluate(LaurentPolynomial.constant(4) + self.t, 0), 4)
        with self.assertRaises(EvaluationError):
            evaluate(f, 0)

    def test_derivative(self):
        f = self.t * self.t + self.t_inverse
        self.assertEqual(f.derivative(), LaurentPolynomial({1: 2, -2: -1}))

    def test_solve_on_target(self):
        roots = sorted(solve_on_target(self.t + self.t_inverse, 2.5), key=abs)
        self.assertEqual(len(roots), 2)
        self.assertAlmostEqual(roots[0], 0.5)
        self.assertAlmostEqual(roots[1], 2)

    def test_solve_elliptic_target(self):
        for t0 in solve_on_target(self.t + self.t_inverse, elliptic_trace(5)):
            self.assertAlmostEqual(abs(t0), 1)

    def test_constant_has_no_roots(self):
        with self.assertRaises(DegeneratePolynomialError):
            solve_on_target(LaurentPolynomial.constant(3), 1)


class TestLaurentMatrix(TestCase):
    def test_twist(self):
        twist = LaurentMatrix.diagonal_twist()
        self.assertEqual(twist.determinant(), 1)
        self.assertEqual((twist @ LaurentMatrix.diagonal_twist_inverse()).trace(), 2)
        parabolic = LaurentMatrix.parabolic_twist() @ LaurentMatrix.parabolic_twist_inverse()
        self.assertEqual(parabolic.b, 0)

    def test_conjugation_trace(self):
        # tr(c T d T^-1) at t = 1 is tr(c d)
        c = ProjectiveMatrix.of(1, 1, 1, 2)
        d = ProjectiveMatrix.of(2, 1, 3, 2)
        product = LaurentMatrix.constant(c) @ LaurentMatrix.diagonal_twist() @ LaurentMatrix.constant(d) \
            @ LaurentMatrix.diagonal_twist_inverse()
        f = product.trace()
        self.assertAlmostEqual(f(1), trace(mul(c, d)))
        self.assertEqual((f.min_degree, f.max_degree), (-2, 2))
        s = exp(1j * pi / 7)
        expected = np.trace(c.entries @ np.diag([s, 1 / s]) @ d.entries @ np.diag([1 / s, s]))
        self.assertAlmostEqual(f(s), expected)


if __name__ == '__main__':
    main()
