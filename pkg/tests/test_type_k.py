from copy import deepcopy
from fractions import Fraction
from unittest import TestCase
from sympy import Integer
from typek.errors import FixtureError, PreconditionError
from typek.lattice import parse_lattice
from typek.type_k import (
    GROUP_TAGS, TrilinearTypeL, brauer_m, build_tables, c2_coeff, coinvariant_rank_check, elliptic_mirror,
    elliptic_mirror_inverse, h1_exponent, hodge_check, hodge_numbers, lcsl_check, lcsl_scale, mu_X_eval,
    noncyclic_glue_ratio, record, record_problems, records, symplectic_problems, symplectic_table, tube_domain_period,
    type_l_lattice, verify_duality)
from tests.utils import reset_tables, shipped_tables


class TestTables(TestCase):
    def setUp(self):
        reset_tables()

    def test_order(self):
        self.assertEqual([r.tag for r in records()], GROUP_TAGS)

    def test_record(self):
        r = record("D12")
        self.assertEqual(r.order, 12)
        self.assertEqual(r.M.rank, 2)
        self.assertEqual(r.N.rank, 4)

    def test_unknown(self):
        with self.assertRaises(PreconditionError):
            record("C7")

    def test_symplectic(self):
        for s in symplectic_table():
            self.assertEqual(symplectic_problems(s), [], s.expr)

    def test_disc_mismatch(self):
        data = deepcopy(shipped_tables())
        data["groups"][0]["disc_M"] = 512
        with self.assertRaises(FixtureError):
            build_tables(data)

    def test_lattice_rules(self):
        for r in records():
            self.assertEqual(record_problems(r), [], r.tag)

    def test_wrong_signature(self):
        data = deepcopy(shipped_tables())
        row = next(row for row in data["groups"] if row["tag"] == "D10")
        row["M_G"], row["disc_M"] = "U(2)+<4>", 16
        broken = build_tables(data).records["D10"]
        self.assertEqual(record_problems(broken), ["M_G has signature (2, 1) != (1, 2)"])

    def test_odd_lattice(self):
        data = deepcopy(shipped_tables())
        row = next(row for row in data["groups"] if row["tag"] == "D10")
        row["N_G"], row["disc_N"] = "U(5)+U(10)+<-3>", 7500
        broken = build_tables(data).records["D10"]
        self.assertEqual(record_problems(broken), ["N_G is not even"])

    def test_missing_section(self):
        with self.assertRaises(FixtureError):
            build_tables({"groups": []})


class TestBrauer(TestCase):
    def setUp(self):
        reset_tables()

    def test_c2(self):
        row = brauer_m("C2")
        self.assertEqual(row.as_tuple(), (1, 1024, 1024, 10, 12, 2, 1))

    def test_d12(self):
        row = brauer_m("D12")
        self.assertEqual((row.a, row.rank, row.n, row.m), (1, 4, 3, 2))

    def test_all_rows(self):
        for r in records():
            row = brauer_m(r.tag)
            self.assertEqual((row.a, row.rank, row.n, row.m),
                             (r.expected_a, r.expected_rank, r.expected_n, r.expected_m), r.tag)

    def test_h1(self):
        self.assertEqual(h1_exponent("C2"), 3)
        self.assertEqual(h1_exponent("C2xD8"), 5)


class TestDuality(TestCase):
    def setUp(self):
        reset_tables()

    def test_c2_integral(self):
        verdict = verify_duality("C2")
        self.assertTrue(verdict)
        self.assertTrue(verdict.integral)

    def test_rational(self):
        for tag in GROUP_TAGS:
            verdict = verify_duality(tag)
            self.assertTrue(verdict.rational, tag)

    def test_lcsl(self):
        self.assertTrue(lcsl_check("D12"))
        self.assertEqual(lcsl_scale("D12"), 6)
        self.assertEqual(lcsl_scale("D8"), 4)


class TestSupplements(TestCase):
    def setUp(self):
        reset_tables()

    def test_hodge(self):
        self.assertEqual(hodge_numbers("D12"), (3, 3))
        self.assertEqual(hodge_numbers("C2"), (11, 11))
        for tag in GROUP_TAGS:
            self.assertEqual(hodge_check(tag), [], tag)

    def test_c2_coefficient(self):
        self.assertEqual(c2_coeff("D12"), 2)
        self.assertEqual(c2_coeff("D10"), Fraction(12, 5))

    def test_noncyclic(self):
        self.assertEqual(noncyclic_glue_ratio("C2", "C2xC2"), 4)
        self.assertEqual(noncyclic_glue_ratio("C4", "C2xC4"), 4)

    def test_coinvariant_rank(self):
        self.assertEqual(coinvariant_rank_check("C6"), [])
        with self.assertRaises(PreconditionError):
            coinvariant_rank_check("C7")


class TestTrilinear(TestCase):
    def setUp(self):
        reset_tables()

    def test_symmetric(self):
        mu = TrilinearTypeL(parse_lattice("U"))
        x, y, z = ([1, 0], 1), ([0, 1], 2), ([1, 1], 3)
        self.assertEqual(mu(x, y, z), mu(z, x, y))
        self.assertEqual(mu(x, y, z), mu(y, x, z))
        self.assertEqual(mu.evaluate([1, 0], [0, 1], 2), 2)

    def test_type_l(self):
        self.assertEqual(type_l_lattice("D12").gram, [[0, 1], [1, 0]])
        self.assertEqual(mu_X_eval("D12", [1, 0], [0, 1], 3), 3)


class TestPeriods(TestCase):
    def setUp(self):
        reset_tables()

    def test_tube_domain(self):
        period = tube_domain_period("D12", [Fraction(1, 2), Fraction(-1, 3)], [Fraction(1), Fraction(2)])
        self.assertEqual(period.pairing(period), 0)
        self.assertEqual(period.pairing(period.conjugate()), Integer(16))
        self.assertEqual(period.as_pairs()[2], (Fraction(1, 2), Fraction(1)))

    def test_kappa_outside_cone(self):
        with self.assertRaises(PreconditionError):
            tube_domain_period("D12", [0, 0], [1, -1])
        with self.assertRaises(PreconditionError):
            tube_domain_period("D12", [0], [1])

    def test_elliptic_mirror(self):
        tau = elliptic_mirror(Fraction(1, 3), Fraction(2))
        self.assertEqual(elliptic_mirror_inverse(tau), (Fraction(1, 3), Fraction(2)))
        with self.assertRaises(PreconditionError):
            elliptic_mirror(Fraction(0), Fraction(0))
