from unittest import TestCase
from typek.errors import LatticeError, PreconditionError
from typek.group_lattice import (
    EigenvalueMultiset, LatticeAction, action_summary, anti_invariant_torsion, check_enriques, coinv_det,
    coinvariant_lattice, enriques_model, glue_exponent, invariant_lattice)
from typek.lattice import parse_lattice

SWAP = [[0, 1], [1, 0]]


class TestLatticeAction(TestCase):
    def test_swap_on_u(self):
        action = LatticeAction(parse_lattice("U"), [SWAP])
        self.assertEqual(action.order(), 2)
        self.assertEqual(invariant_lattice(action).gram, [[2]])
        self.assertEqual(coinvariant_lattice(action).gram, [[-2]])

    def test_not_an_isometry(self):
        with self.assertRaises(LatticeError):
            LatticeAction(parse_lattice("U"), [[[2, 0], [0, 1]]])

    def test_wrong_shape(self):
        with self.assertRaises(LatticeError):
            LatticeAction(parse_lattice("U"), [[[1]]])

    def test_json(self):
        action = LatticeAction(parse_lattice("U"), [SWAP])
        self.assertEqual(LatticeAction.from_json(action.to_json()).generators, [SWAP])


class TestInvolutions(TestCase):
    def test_glue_on_u(self):
        lattice = parse_lattice("U")
        self.assertEqual(glue_exponent(lattice, SWAP), 1)
        self.assertEqual(anti_invariant_torsion(lattice, SWAP), [])

    def test_trivial(self):
        with self.assertRaises(PreconditionError):
            glue_exponent(parse_lattice("U"), [[1, 0], [0, 1]])

    def test_not_involution(self):
        # order three rotation of A2
        with self.assertRaises(LatticeError):
            glue_exponent(parse_lattice("A2"), [[0, -1], [1, -1]])


class TestEnriques(TestCase):
    def test_model(self):
        action = enriques_model(verify=True)
        self.assertEqual(check_enriques(action), [])

    def test_summary(self):
        action = enriques_model(verify=False)
        summary = action_summary(action, action.generators[0])
        self.assertEqual(summary["invariant_rank"], 10)
        self.assertEqual(summary["invariant_signature"], (1, 9))
        self.assertEqual(summary["invariant_disc"], 1024)
        self.assertEqual(summary["coinvariant_rank"], 12)
        self.assertEqual(summary["coinvariant_signature"], (2, 10))
        self.assertEqual(summary["a"], 10)
        self.assertEqual(summary["torsion"], [2, 2])


class TestCoinvDet(TestCase):
    def test_cyclotomic_values(self):
        self.assertEqual(coinv_det(EigenvalueMultiset([(2, 8)])), 256)
        self.assertEqual(coinv_det(EigenvalueMultiset([(3, 6)])), 729)
        self.assertEqual(coinv_det(EigenvalueMultiset([(2, 6), (4, 4)])), 1024)
        self.assertEqual(coinv_det(EigenvalueMultiset([(5, 4)])), 625)
        self.assertEqual(coinv_det(EigenvalueMultiset([(2, 4), (3, 4), (6, 2)])), 1296)

    def test_total(self):
        self.assertEqual(EigenvalueMultiset([(2, 4), (3, 4), (6, 2)]).total(), 16)

    def test_eigenvalue_one(self):
        with self.assertRaises(PreconditionError):
            coinv_det(EigenvalueMultiset([(1, 1)]))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            EigenvalueMultiset([(0, 1)])
