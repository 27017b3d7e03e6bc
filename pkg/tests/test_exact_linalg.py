from fractions import Fraction
from unittest import TestCase
from typek.exact_linalg import (
    congruent_diagonalize, determinant, hermite_normal_form, inertia, matmul, rational_inverse,
    rational_kernel, rational_rank, saturated_kernel, smith_normal_form, transpose)
from typek.lattice import cartan_e


class TestSmithNormalForm(TestCase):
    def test_divisors(self):
        snf = smith_normal_form([[2, 4], [6, 8]])
        self.assertEqual(snf.divisors, [2, 4])
        self.assertEqual(matmul(matmul(snf.U, [[2, 4], [6, 8]]), snf.V), snf.D)

    def test_rectangular(self):
        A = [[2, 0], [0, 3], [0, 0]]
        snf = smith_normal_form(A)
        self.assertEqual(snf.divisors, [1, 6])
        self.assertEqual(matmul(matmul(snf.U, A), snf.V), snf.D)

    def test_rank_deficient(self):
        snf = smith_normal_form([[1, 2], [2, 4]])
        self.assertEqual(snf.rank, 1)
        self.assertEqual(snf.divisors, [1])


class TestHermite(TestCase):
    def test_reduced(self):
        self.assertEqual(hermite_normal_form([[2, 4], [0, 3]]), [[2, 1], [0, 3]])

    def test_drops_zero_rows(self):
        self.assertEqual(hermite_normal_form([[2, 0], [4, 0]]), [[2, 0]])


class TestKernels(TestCase):
    def test_saturated(self):
        self.assertEqual(saturated_kernel([[2, 2]]), [[1, -1]])

    def test_saturated_rank(self):
        kernel = saturated_kernel([[1, 1, 0]])
        self.assertEqual(len(kernel), 2)
        for row in kernel:
            self.assertEqual(row[0] + row[1], 0)

    def test_empty_constraints(self):
        self.assertEqual(saturated_kernel([], 2), [[1, 0], [0, 1]])

    def test_rational(self):
        self.assertEqual(rational_kernel([[1, 2]]), [[Fraction(-2), Fraction(1)]])
        self.assertEqual(rational_rank([[1, 2], [2, 4]]), 1)


class TestDeterminant(TestCase):
    def test_small(self):
        self.assertEqual(determinant([[2, 1], [1, 2]]), 3)
        self.assertEqual(determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(determinant([[1, 2], [2, 4]]), 0)

    def test_e8_unimodular(self):
        self.assertEqual(determinant(cartan_e(8)), 1)

    def test_inverse(self):
        self.assertEqual(rational_inverse([[2, 1], [1, 1]]), [[1, -1], [-1, 2]])

    def test_singular_inverse(self):
        with self.assertRaises(ValueError):
            rational_inverse([[1, 2], [2, 4]])


class TestDiagonalize(TestCase):
    def test_congruence(self):
        S = [[0, 1, 0], [1, 0, 2], [0, 2, 3]]
        P, d = congruent_diagonalize(S)
        D = matmul(matmul(transpose(P), S), P)
        for i in range(3):
            for j in range(3):
                self.assertEqual(D[i][j], d[i] if i == j else 0)

    def test_inertia(self):
        self.assertEqual(inertia([[0, 1], [1, 0]]), (1, 1, 0))
        self.assertEqual(inertia([[-x for x in row] for row in cartan_e(8)]), (0, 8, 0))
        self.assertEqual(inertia([[1, 1], [1, 1]]), (1, 0, 1))
