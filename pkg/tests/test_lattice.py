from unittest import TestCase
from typek.errors import LatticeError, LatticeParseError
from typek.lattice import (Lattice, cartan_a, cartan_d, cartan_e, direct_sum, orthogonal_complement,
                           parse_lattice, parse_terms, format_terms, rescale, summand_basis)


class TestParse(TestCase):
    def test_enriques_coinvariant(self):
        lattice = parse_lattice("U + U(2) + E8(-2)")
        self.assertEqual(lattice.rank, 12)
        self.assertEqual(lattice.signature(), (2, 10))
        self.assertEqual(lattice.disc(), 1024)
        self.assertTrue(lattice.is_even())

    def test_multiplicity(self):
        lattice = parse_lattice("2*<-4>")
        self.assertEqual(lattice.gram, [[-4, 0], [0, -4]])
        self.assertEqual(str(lattice), "2*<-4>")

    def test_k3(self):
        k3 = parse_lattice("K3")
        self.assertEqual(k3.rank, 22)
        self.assertEqual(k3.signature(), (3, 19))
        self.assertTrue(k3.is_unimodular())
        self.assertEqual(str(k3), "3*U+2*E8(-1)")

    def test_unicode(self):
        lattice = parse_lattice("U ⊕ A2(−1)")
        self.assertEqual(lattice.rank, 4)
        self.assertEqual(lattice.signature(), (1, 3))

    def test_canonical_text(self):
        self.assertEqual(format_terms(parse_terms("A2+A2+U(2)")), "2*A2+U(2)")

    def test_unknown_name(self):
        with self.assertRaises(LatticeParseError) as context:
            parse_lattice("U + Q")
        self.assertEqual(context.exception.position, 4)

    def test_bad_indices(self):
        for expression in ("A0", "D3", "E9", "U(0)", "U +", "0*U", "<2"):
            with self.assertRaises(LatticeParseError, msg=expression):
                parse_lattice(expression)


class TestConstructors(TestCase):
    def test_determinants(self):
        self.assertEqual(Lattice(cartan_a(2)).disc(), 3)
        self.assertEqual(Lattice(cartan_d(4)).disc(), 4)
        self.assertEqual(Lattice(cartan_e(6)).disc(), 3)
        self.assertEqual(Lattice(cartan_e(7)).disc(), 2)
        self.assertEqual(Lattice(cartan_e(8)).disc(), 1)

    def test_not_symmetric(self):
        with self.assertRaises(LatticeError):
            Lattice([[2, 1], [0, 2]])

    def test_direct_sum_and_rescale(self):
        self.assertEqual(str(direct_sum(parse_lattice("U"), parse_lattice("A2"))), "U+A2")
        self.assertEqual(str(rescale(parse_lattice("U"), 2)), "U(2)")
        with self.assertRaises(LatticeError):
            rescale(parse_lattice("U"), 0)

    def test_odd(self):
        self.assertFalse(parse_lattice("<1>+<-1>").is_even())

    def test_json(self):
        lattice = parse_lattice("U(2)+A2")
        self.assertEqual(Lattice.from_json(lattice.to_json()), lattice)
        with self.assertRaises(LatticeError):
            Lattice.from_json({"expr": "U", "gram": [[0, 2], [2, 0]]})


class TestComplement(TestCase):
    def test_second_plane(self):
        lattice = parse_lattice("U+U")
        complement = orthogonal_complement(lattice, summand_basis(lattice, 0))
        self.assertEqual(complement.gram, [[0, 1], [1, 0]])

    def test_diagonal_vector(self):
        complement = orthogonal_complement(parse_lattice("<2>+<2>"), [[1, 1]])
        self.assertEqual(complement.gram, [[4]])

    def test_dependent_rows(self):
        with self.assertRaises(LatticeError):
            orthogonal_complement(parse_lattice("U"), [[1, 0], [2, 0]])
