from fractions import Fraction
from unittest import TestCase
from sympy import symbols
from typek.errors import SeriesError, SolveError
from typek.picard_fuchs import (
    D12Family, D8Family, PRINTED_FRANEL, ThetaOperator, d12_coefficient, d8_operator, elliptic_operator,
    elliptic_suite, franel, residual, solve_regular, verify_theta_inverse, yukawa_check)
from typek.qseries import MultiSeries

TRUNC = 3


class TestSolver(TestCase):
    def test_franel(self):
        phi = solve_regular([elliptic_operator()], 6)
        self.assertEqual([phi[(n,)] for n in range(7)], PRINTED_FRANEL)
        self.assertEqual([franel(n) for n in range(7)], PRINTED_FRANEL)

    def test_underdetermined(self):
        z, t = symbols('z t')
        op = ThetaOperator.from_expr(t ** 2 - t, [z], [t])
        with self.assertRaises(SolveError) as context:
            solve_regular([op], 2)
        self.assertEqual(context.exception.kind, "underdetermined")
        self.assertEqual(context.exception.order, 1)

    def test_inconsistent(self):
        z, t = symbols('z t')
        op = ThetaOperator.from_expr(t ** 2 - t - z, [z], [t])
        with self.assertRaises(SolveError) as context:
            solve_regular([op], 2)
        self.assertEqual(context.exception.kind, "inconsistent")

    def test_wrong_ring(self):
        with self.assertRaises(SeriesError):
            elliptic_operator().on_series(MultiSeries.one(2, 2))


class TestD12(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.family = D12Family(TRUNC)

    def test_phi0(self):
        for d in range(TRUNC + 1):
            for m in range(d + 1):
                self.assertEqual(self.family.phi0[(m, d - m)], d12_coefficient(m, d - m))
        self.assertEqual(self.family.phi0[(1, 1)], 1680)

    def test_log_solutions(self):
        r1 = self.family.solutions[0].regular
        self.assertEqual((r1[(1, 0)], r1[(0, 1)]), (40, 64))
        self.assertEqual(self.family.solutions[1].regular, r1.permute([1, 0]))

    def test_annihilated(self):
        for f in [self.family.phi0] + self.family.solutions:
            self.assertTrue(all(r.is_zero() for r in residual(self.family.operators, f)))

    def test_mirror_map(self):
        q1 = self.family.mirror.forward[0]
        self.assertEqual(q1.trunc, TRUNC + 1)
        self.assertEqual((q1[(2, 0)], q1[(1, 1)]), (40, 64))
        identity = [MultiSeries.variable(i, 2, TRUNC + 1) for i in range(2)]
        self.assertEqual(self.family.mirror.round_trip(), identity)

    def test_theta_inverse(self):
        verify_theta_inverse(TRUNC, self.family)

    def test_yukawa(self):
        result = yukawa_check(TRUNC, self.family)
        self.assertEqual(result.gram(), [[0, 1], [1, 0]])
        self.assertEqual(result.constant, Fraction(1, 4096))

    def test_dumps(self):
        dumps = self.family.dumps()
        self.assertEqual(sorted(dumps), ["Phi0", "R1", "R2", "q1", "q2", "z1(q)", "z2(q)"])
        self.assertTrue(dumps["Phi0"].startswith("1 + 12*z1 + 12*z2"))


class TestD8(TestCase):
    def test_family(self):
        family = D8Family(2)
        self.assertEqual(family.phi0[(1, 0, 0)], 12)
        self.assertEqual(family.phi0[(1, 1, 0)], 1680)
        self.assertTrue(family.symmetric())

    def test_combination(self):
        family = D8Family(2)
        op = d8_operator([Fraction(1, 2), -3, 2, Fraction(7, 3), 0, 1])
        self.assertTrue(op.on_series(family.phi0).is_zero())

    def test_parameter_count(self):
        with self.assertRaises(SeriesError):
            d8_operator([1, 2, 3])


class TestElliptic(TestCase):
    def test_suite(self):
        checks = elliptic_suite(8)
        failed = [c for c in checks if not c.ok]
        self.assertEqual(failed, [])
        self.assertEqual(len(checks), 7)
