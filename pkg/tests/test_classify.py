from fractions import Fraction
from unittest import TestCase, main

from ftype.classify import ProperPower, TitsPattern, TwoInvolutions, deficiency, euler_characteristic, \
    factor_contains_free_rank2, freiheitssatz, hyperbolicity, malnormal_amalgam, quotient_conditions, \
    riemann_hurwitz, sq_universal, tits_classify, torsion
from hypothesis import given, settings, strategies as st

from ftype.errors import NotSpecialError, PreconditionError

from .test_presentation import load, presentation, relabelings


class TestInvariants(TestCase):
    def test_euler_characteristic(self):
        expected = {
            'trefoil': 0,
            'h1': 0,
            'h2': 0,
            'h3': 0,
            'special': Fraction(-1, 3),
            'hyperbolic': Fraction(-1, 6),
        }
        for name, chi in expected.items():
            with self.subTest(name=name):
                self.assertEqual(euler_characteristic(load(name)), chi)

    def test_riemann_hurwitz(self):
        self.assertEqual(riemann_hurwitz(Fraction(-1, 3), 6), -2)
        with self.assertRaises(PreconditionError):
            riemann_hurwitz(Fraction(-1, 3), 0)

    @given(st.fractions(), st.integers(1, 100), st.integers(1, 100))
    @settings(max_examples=100)
    def test_riemann_hurwitz_is_multiplicative(self, chi, i, j):
        self.assertEqual(riemann_hurwitz(chi, i), i * chi)
        self.assertEqual(riemann_hurwitz(riemann_hurwitz(chi, i), j), riemann_hurwitz(chi, i * j))

    def test_triangle_group_characteristic(self):
        # exponents 2 3 7 admit no valid U, V; the characteristic only reads the exponents
        self.assertEqual(euler_characteristic(presentation('2 3 7', 2, 'a b', 'c', gens='a b c')), Fraction(-1, 42))

    def test_deficiency(self):
        found = deficiency(load('special'), 6)
        self.assertEqual(found.d, 3)
        self.assertTrue(found.maps_onto_free_rank2)
        self.assertFalse(found.extends_hypothesis)
        found = deficiency(load('trefoil'), 1)
        self.assertEqual(found.d, 1)
        self.assertFalse(found.maps_onto_free_rank2)
        self.assertTrue(found.extends_hypothesis)
        with self.assertRaises(PreconditionError):
            deficiency(load('special'), 0)

    def test_deficiency_examples(self):
        five = presentation('2 2 2 2 2', 2, 'a b', 'c d e', gens='a b c d e')
        self.assertEqual(deficiency(five, 2).d, 2)
        self.assertTrue(deficiency(five, 2).maps_onto_free_rank2)
        self.assertEqual(deficiency(load('h3'), 1).d, 1)
        self.assertFalse(deficiency(load('h3'), 1).maps_onto_free_rank2)
        self.assertEqual(deficiency(load('hyperbolic'), 6).d, 2)
        self.assertFalse(deficiency(load('hyperbolic'), 6).extends_hypothesis)
        self.assertEqual(deficiency(load('hyperbolic'), 6).subgroup_chi, -1)

    def test_quotient_conditions(self):
        conditions = quotient_conditions(load('special'), 3)
        self.assertEqual(conditions.quantity, 2)
        self.assertTrue(conditions.finite_index_onto_z)
        self.assertFalse(conditions.finite_index_onto_free_rank2)
        self.assertTrue(conditions.free_subgroup_rank2)
        self.assertFalse(conditions.virtually_torsion_free)

        conditions = quotient_conditions(load('special'), 8)
        self.assertEqual(conditions.quantity, Fraction(43, 24))
        self.assertFalse(conditions.finite_index_onto_z)
        self.assertTrue(conditions.virtually_torsion_free)

        conditions = quotient_conditions(load('h3'), 2)
        self.assertFalse(conditions.free_subgroup_rank2)

    def test_quotient_conditions_examples(self):
        five = presentation('2 2 2 2 2', 2, 'a b', 'c d e', gens='a b c d e')
        conditions = quotient_conditions(five, 2)
        self.assertEqual(conditions.quantity, 3)
        self.assertTrue(conditions.finite_index_onto_z)
        self.assertFalse(conditions.finite_index_onto_free_rank2)
        self.assertTrue(conditions.free_subgroup_rank2)
        self.assertFalse(conditions.virtually_torsion_free)

        six = presentation('0 0 0 0 0 0', 3, 'a b c', 'd e f', gens='a b c d e f')
        conditions = quotient_conditions(six, 2)
        self.assertEqual(conditions.quantity, Fraction(1, 2))
        self.assertFalse(conditions.finite_index_onto_z)
        self.assertTrue(conditions.finite_index_onto_free_rank2)
        self.assertTrue(conditions.free_subgroup_rank2)

    def test_quotient_conditions_preconditions(self):
        with self.assertRaises(PreconditionError):
            quotient_conditions(load('special'), 1)
        with self.assertRaises(NotSpecialError):
            quotient_conditions(load('trefoil'), 3)

    def test_torsion(self):
        report = torsion(load('special'))
        self.assertEqual(report.element_orders, (2, 3))
        self.assertEqual(report.generator_orders, {'a': 2, 'b': 3, 'c': 2, 'd': 3})
        self.assertTrue(report.residually_finite)
        report = torsion(load('trefoil'))
        self.assertEqual(report.element_orders, ())
        self.assertEqual(report.generator_orders, {'a': None, 'b': None})
        self.assertTrue(report.residually_finite)

    def test_freiheitssatz(self):
        special = load('special')
        self.assertTrue(freiheitssatz(special, ['a', 'c']))
        self.assertFalse(freiheitssatz(special, ['a', 'b', 'c']))
        self.assertFalse(freiheitssatz(special, ['a', 'b', 'c', 'd']))
        self.assertTrue(freiheitssatz(load('trefoil'), ['a']))


class TestTits(TestCase):
    def test_patterns(self):
        expected = {
            'h1': TitsPattern.H1,
            'h2': TitsPattern.H2,
            'h3': TitsPattern.H3,
            'trefoil': None,
            'special': None,
            'hyperbolic': None,
        }
        for name, pattern in expected.items():
            with self.subTest(name=name):
                found = tits_classify(load(name))
                self.assertEqual(found.pattern, pattern)
                self.assertEqual(found.solvable, pattern is not None)

    @given(relabelings(('h1', 'h2', 'h3')))
    @settings(max_examples=100)
    def test_solvable_is_never_hyperbolic(self, pair):
        p, q = pair
        found = tits_classify(q)
        self.assertTrue(found.solvable)
        self.assertEqual(found.pattern, tits_classify(p).pattern)
        self.assertFalse(hyperbolicity(q).hyperbolic)

    def test_str(self):
        self.assertEqual(str(tits_classify(load('h3'))), 'Solvable(H3)')
        self.assertEqual(str(tits_classify(load('special'))), 'ContainsFreeRank2')

    def test_sq_universal(self):
        self.assertTrue(sq_universal(load('special')))
        self.assertFalse(sq_universal(load('h1')))

    def test_factor_contains_free_rank2(self):
        special, h3 = load('special'), load('h3')
        self.assertTrue(factor_contains_free_rank2(special.alphabet, special.left))
        self.assertFalse(factor_contains_free_rank2(h3.alphabet, h3.left))
        self.assertFalse(factor_contains_free_rank2(special.alphabet, (0,)))
        self.assertTrue(factor_contains_free_rank2(h3.alphabet, (0, 1, 2)))


class TestHyperbolicity(TestCase):
    @given(relabelings(('trefoil', 'h1', 'h2', 'h3', 'hyperbolic', 'special', 'remark', 'free4', 'mixed')))
    @settings(max_examples=100)
    def test_invariant_under_relabeling(self, pair):
        p, q = pair
        self.assertEqual(hyperbolicity(q).hyperbolic, hyperbolicity(p).hyperbolic)
        self.assertEqual(tits_classify(q).solvable, tits_classify(p).solvable)

    def test_trefoil(self):
        verdict = hyperbolicity(load('trefoil'))
        self.assertFalse(verdict.hyperbolic)
        self.assertIsInstance(verdict.obstruction_u, ProperPower)
        self.assertEqual((str(verdict.obstruction_u.root), verdict.obstruction_u.k), ('a', 2))
        self.assertEqual((str(verdict.obstruction_v.root), verdict.obstruction_v.k), ('b', 3))

    def test_one_side_free_of_obstructions(self):
        verdict = hyperbolicity(load('hyperbolic'))
        self.assertTrue(verdict.hyperbolic)
        self.assertIsInstance(verdict.obstruction_u, TwoInvolutions)
        self.assertIsNone(verdict.obstruction_v)

    def test_h3(self):
        verdict = hyperbolicity(load('h3'))
        self.assertFalse(verdict.hyperbolic)
        self.assertIn("G has no faithful representation in PSL(2,R)", verdict.notes)

    def test_special(self):
        verdict = hyperbolicity(load('special'))
        self.assertTrue(verdict.hyperbolic)
        self.assertIsNone(verdict.obstruction_u)
        self.assertIsNone(verdict.obstruction_v)


class TestMalnormality(TestCase):
    def test_criterion_holds(self):
        report = malnormal_amalgam(load('special'))
        self.assertTrue(report.criterion_holds)
        self.assertEqual(report.witnesses, {})
        self.assertIn("rank(G) >= 3", report.consequences)

    def test_witnesses(self):
        report = malnormal_amalgam(load('trefoil'))
        self.assertFalse(report.criterion_holds)
        self.assertEqual(set(report.witnesses), {'U', 'V'})
        report = malnormal_amalgam(load('hyperbolic'))
        self.assertEqual(set(report.witnesses), {'U'})
        self.assertIsInstance(report.witnesses['U'], TwoInvolutions)

    def test_allows_omitted_generators(self):
        self.assertFalse(malnormal_amalgam(load('omitting')).criterion_holds)


if __name__ == '__main__':
    main()
