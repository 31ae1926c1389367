from pathlib import Path
from unittest import TestCase, main

from hypothesis import given, settings, strategies as st

from ftype.errors import AlphabetError, FactorError, GeneratorOmittedError, InvalidPresentationError, \
    PresentationSyntaxError
from ftype.presentation import FTypePresentation, Severity, decompose, format_presentation, is_special, parse, \
    require_valid, validate
from ftype.words import Alphabet, normalize, order_of

PRESENTATIONS = Path(__file__).parent / 'presentations'


def load(name: str):
    return parse((PRESENTATIONS / f'{name}.ftype').read_text())


def presentation(exps: str, p: int, u: str, v: str, gens: str = 'a b c d'):
    return parse(f"gens: {gens}\nexps: {exps}\np: {p}\nU: {u}\nV: {v}\n")


def relabel(p: FTypePresentation, left_order, right_order, swap: bool = False, invert: bool = False):
    """The same group with the generators permuted within each factor, and optionally the factors swapped
    (V U = 1) or both words inverted (U^-1 V^-1 = 1)."""
    left = [p.left[i] for i in left_order]
    right = [p.right[i] for i in right_order]
    order = right + left if swap else left + right
    alphabet = Alphabet([p.alphabet.name(g) for g in order], [p.alphabet.order(g) for g in order])
    position = {g: i for i, g in enumerate(order)}
    u, v = (p.v, p.u) if swap else (p.u, p.v)
    u, v = (normalize(((position[g], k) for g, k in w.syllables), alphabet) for w in (u, v))
    if invert:
        u, v = ~u, ~v
    return FTypePresentation(alphabet, len(right) if swap else len(left), u, v)


def relabelings(names):
    """Strategy of relabeled sample presentations, paired with the original."""
    @st.composite
    def relabeled(draw):
        p = load(draw(st.sampled_from(names)))
        q = relabel(
            p,
            draw(st.permutations(range(len(p.left)))),
            draw(st.permutations(range(len(p.right)))),
            draw(st.booleans()),
            draw(st.booleans()),
        )
        return p, q
    return relabeled()


class TestParser(TestCase):
    def test_sample_files(self):
        trefoil = load('trefoil')
        self.assertEqual(trefoil.n, 2)
        self.assertEqual(trefoil.p, 1)
        self.assertEqual(str(trefoil.u), 'a^2')
        self.assertEqual(str(trefoil.relator), 'a^2 b^3')
        special = load('special')
        self.assertEqual(special.exponents, (2, 3, 2, 3))
        self.assertEqual(special.left, (0, 1))
        self.assertEqual(special.right, (2, 3))

    def test_round_trip(self):
        for name in ('trefoil', 'h1', 'h2', 'h3', 'hyperbolic', 'special', 'remark', 'free4', 'mixed'):
            with self.subTest(name=name):
                p = load(name)
                self.assertEqual(parse(format_presentation(p)), p)

    def test_comments_and_blank_lines(self):
        p = parse("# header\n\ngens: a b  # two\nexps: 0 0\np: 1\nU: a^2\nV: b^3\n")
        self.assertEqual(str(p.v), 'b^3')

    def test_missing_key(self):
        with self.assertRaisesRegex(PresentationSyntaxError, "missing key 'V'"):
            parse("gens: a b\nexps: 0 0\np: 1\nU: a^2\n")

    def test_unknown_and_duplicate_keys(self):
        with self.assertRaises(PresentationSyntaxError) as caught:
            parse("gens: a b\nexps: 0 0\nq: 1\n")
        self.assertEqual((caught.exception.line, caught.exception.column), (3, 1))
        with self.assertRaisesRegex(PresentationSyntaxError, 'duplicate'):
            parse("gens: a b\ngens: a b\n")

    def test_bad_values(self):
        with self.assertRaisesRegex(PresentationSyntaxError, 'integers'):
            presentation('2 x 2 3', 2, 'a b', 'c d')
        with self.assertRaises(AlphabetError):
            presentation('2 1 2 3', 2, 'a b', 'c d')
        with self.assertRaisesRegex(PresentationSyntaxError, 'p must satisfy'):
            presentation('2 3 2 3', 4, 'a b', 'c d')
        with self.assertRaises(PresentationSyntaxError) as caught:
            presentation('2 3 2 3', 2, 'a b^', 'c d')
        self.assertEqual(caught.exception.line, 4)

    def test_factor_errors(self):
        with self.assertRaises(FactorError):
            presentation('2 3 2 3', 2, 'a c', 'c d')
        with self.assertRaises(FactorError):
            presentation('2 3 2 3', 2, 'a b', 'b d')


class TestValidation(TestCase):
    def codes(self, p):
        return [finding.code for finding in validate(p).errors]

    def test_valid(self):
        for name in ('trefoil', 'h1', 'h2', 'h3', 'hyperbolic', 'special', 'remark', 'free4', 'mixed'):
            with self.subTest(name=name):
                report = validate(load(name))
                self.assertTrue(report.ok)
                self.assertEqual(report.omitted_generators, [])

    def test_not_cyclically_reduced(self):
        self.assertEqual(self.codes(presentation('0 0 2 3', 2, 'a b a^-1', 'c d')), ['u-not-cyclically-reduced'])

    def test_finite_order(self):
        self.assertEqual(self.codes(presentation('2 3 2 3', 2, 'a', 'c d')), ['u-finite-order'])

    def test_trivial(self):
        self.assertEqual(self.codes(presentation('2 3 2 3', 2, '1', 'c d')), ['u-trivial'])

    def test_single_generator_factor(self):
        self.assertIn('u-not-proper-generator-power', self.codes(presentation('0 0', 1, 'a', 'b^2', gens='a b')))
        self.assertIn('v-not-proper-generator-power',
                      self.codes(presentation('2 2 3', 2, 'a b', 'c^2', gens='a b c')))

    def test_omission(self):
        report = validate(load('omitting'))
        self.assertTrue(report.ok)
        self.assertEqual(report.omitted_generators, ['c'])
        self.assertEqual([f.code for f in report.warnings], ['generator-omitted'])
        self.assertEqual(report.split.free_factor.describe(), 'Z')
        self.assertEqual(format_presentation(report.split.remainder), format_presentation(load('trefoil')))
        self.assertTrue(all(f.severity is Severity.WARNING for f in report.findings))

    @given(
        st.lists(st.sampled_from((0, 2, 3)), min_size=4, max_size=4),
        st.lists(st.tuples(st.integers(0, 1), st.integers(-3, 3)), max_size=6),
        st.lists(st.tuples(st.integers(2, 3), st.integers(-3, 3)), max_size=6),
    )
    @settings(max_examples=200)
    def test_finite_order_findings_follow_order_of(self, exps, raw_u, raw_v):
        alphabet = Alphabet('a b c d'.split(), exps)
        p = FTypePresentation(alphabet, 2, normalize(raw_u, alphabet), normalize(raw_v, alphabet))
        codes = self.codes(p)
        for name, w in (('u', p.u), ('v', p.v)):
            if w.is_identity:
                self.assertIn(f'{name}-trivial', codes)
                self.assertNotIn(f'{name}-finite-order', codes)
            else:
                self.assertEqual(f'{name}-finite-order' in codes, order_of(w).is_finite)

    @given(relabelings(('trefoil', 'h1', 'h2', 'h3', 'hyperbolic', 'special', 'remark', 'free4', 'mixed')))
    @settings(max_examples=100)
    def test_relabeling_keeps_presentations_valid(self, pair):
        p, q = pair
        self.assertTrue(validate(q).ok)
        self.assertEqual(sorted(q.exponents), sorted(p.exponents))
        self.assertEqual(is_special(q), is_special(p))

    def test_require_valid(self):
        with self.assertRaises(GeneratorOmittedError):
            require_valid(load('omitting'))
        require_valid(load('omitting'), allow_omission=True)
        with self.assertRaisesRegex(InvalidPresentationError, 'u-finite-order'):
            require_valid(presentation('2 3 2 3', 2, 'a', 'c d'))


class TestDecomposition(TestCase):
    def test_describe(self):
        self.assertEqual(decompose(load('special')).describe(), {
            'G1': 'Z2 * Z3',
            'G2': 'Z2 * Z3',
            'A_left': 'b^2 a',
            'A_right': 'c d',
        })

    def test_is_special(self):
        self.assertTrue(is_special(load('special')))
        self.assertTrue(is_special(load('h3')))
        self.assertTrue(is_special(load('free4')))
        self.assertTrue(is_special(load('mixed')))
        self.assertFalse(is_special(load('trefoil')))
        self.assertFalse(is_special(load('remark')))
        self.assertFalse(is_special(load('omitting')))


if __name__ == '__main__':
    main()
