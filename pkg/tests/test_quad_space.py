from fractions import Fraction
from unittest import TestCase
from typek.errors import LatticeError
from typek.lattice import parse_lattice
from typek.quad_space import REAL, hilbert_symbol, q_equivalent, q_invariants, squarefree_part


class TestHilbertSymbol(TestCase):
    def test_real(self):
        self.assertEqual(hilbert_symbol(-1, -1, REAL), -1)
        self.assertEqual(hilbert_symbol(-1, 2, REAL), 1)

    def test_two(self):
        self.assertEqual(hilbert_symbol(-1, -1, 2), -1)
        self.assertEqual(hilbert_symbol(2, -1, 2), 1)

    def test_odd(self):
        self.assertEqual(hilbert_symbol(2, 3, 3), -1)
        self.assertEqual(hilbert_symbol(1, 7, 7), 1)

    def test_fraction(self):
        self.assertEqual(hilbert_symbol(Fraction(1, 2), -1, 2), hilbert_symbol(2, -1, 2))

    def test_product_formula(self):
        for expression in ("U+U(2)", "A2(-2)+<4>", "U(3)+U(6)+A2(-2)", "<3>+<3>+<-5>"):
            self.assertEqual(q_invariants(parse_lattice(expression)).product_formula(), 1, expression)


class TestSquareClass(TestCase):
    def test_values(self):
        self.assertEqual(squarefree_part(Fraction(8, 3)), 6)
        self.assertEqual(squarefree_part(-12), -3)
        self.assertEqual(squarefree_part(49), 1)


class TestEquivalence(TestCase):
    def test_hyperbolic(self):
        self.assertTrue(q_equivalent(parse_lattice("U"), parse_lattice("<1>+<-1>")))
        self.assertTrue(q_equivalent(parse_lattice("U+U(2)"), parse_lattice("2*U(6)")))

    def test_signature(self):
        verdict = q_equivalent(parse_lattice("U"), parse_lattice("A2"))
        self.assertFalse(verdict)
        self.assertEqual(verdict.reason, "signature")

    def test_square_class(self):
        self.assertEqual(q_equivalent(parse_lattice("<1>"), parse_lattice("<2>")).reason,
                         "discriminant square class")

    def test_hasse(self):
        verdict = q_equivalent(parse_lattice("<1>+<1>"), parse_lattice("<3>+<3>"))
        self.assertFalse(verdict)
        self.assertTrue(verdict.reason.startswith("Hasse invariant"))

    def test_rank(self):
        self.assertEqual(q_equivalent(parse_lattice("U"), parse_lattice("U+U")).reason, "rank")

    def test_degenerate(self):
        with self.assertRaises(LatticeError):
            q_invariants(parse_lattice("<0>+<1>"))
