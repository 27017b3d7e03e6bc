from fractions import Fraction
from random import Random
from typing import List
from unittest import TestCase
from sympy import Matrix, primefactors
from typek.disc_forms import discriminant_group, overlattice, reduce_mod
from typek.exact_linalg import bilinear, determinant, identity, inertia, matmul, rational_rank, smith_normal_form, transpose
from typek.group_lattice import (LatticeAction, anti_invariant_torsion, coinvariant_lattice, enriques_model,
                                 glue_exponent, invariant_lattice)
from typek.lattice import parse_lattice
from typek.qseries import MultiSeries, monomials, revert_map, theta
from typek.quad_space import REAL, hilbert_symbol
from tests.utils import ISOTROPIC_POOL, SEED, random_matrix, random_nonzero


class TestSmithProperties(TestCase):
    def test_contract(self):
        rng = Random(SEED)
        for _ in range(200):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            A = random_matrix(rng, rows, cols)
            snf = smith_normal_form(A)
            self.assertEqual(matmul(matmul(snf.U, A), snf.V), snf.D)
            self.assertIn(int(Matrix(snf.U).det()), (1, -1))
            self.assertIn(int(Matrix(snf.V).det()), (1, -1))
            self.assertEqual(snf.rank, Matrix(A).rank())
            for d, e in zip(snf.divisors, snf.divisors[1:]):
                self.assertEqual(e % d, 0)

    def test_determinant_and_rank(self):
        rng = Random(SEED + 1)
        for _ in range(50):
            A = random_matrix(rng, 4, 4, 5)
            self.assertEqual(determinant(A), int(Matrix(A).det()))
            self.assertEqual(rational_rank(A), Matrix(A).rank())


class TestHilbertReciprocity(TestCase):
    def test_product_formula(self):
        rng = Random(SEED)
        for _ in range(200):
            a, b = random_nonzero(rng), random_nonzero(rng)
            product = hilbert_symbol(a, b, REAL)
            for p in set(primefactors(2 * a * b)):
                product *= hilbert_symbol(a, b, p)
            self.assertEqual(product, 1, (a, b))


class TestOverlatticeOrder(TestCase):
    def test_index_law(self):
        for expression in ISOTROPIC_POOL:
            lattice = parse_lattice(expression)
            group = discriminant_group(lattice)
            for element in group.elements():
                if not any(element) or group.q_value(element) != 0:
                    continue
                result = overlattice(lattice, [element])
                order = group.element_order(element)
                self.assertEqual(abs(result.disc()) * order * order, abs(lattice.disc()), (expression, element))


class TestSeriesProperties(TestCase):
    def test_jacobi(self):
        self.assertEqual(theta(3, 10) ** 4, theta(2, 10) ** 4 + theta(4, 10) ** 4)

    def test_reversion(self):
        rng = Random(SEED)
        trunc = 3
        for _ in range(10):
            units = []
            for _ in range(2):
                coeffs = {(i, d - i): rng.randint(-3, 3) for d in range(1, trunc + 1) for i in range(d + 1)}
                coeffs[(0, 0)] = 1
                units.append(MultiSeries(2, trunc, coeffs))
            z = revert_map(units)
            for i in range(2):
                self.assertEqual(z[i] * units[i].compose(z), MultiSeries.variable(i, 2, trunc))


def _unimodular(rng: Random, n: int, steps: int = 12) -> List[List[int]]:
    Q = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            for row in Q:
                row[i], row[j] = row[j], row[i]
        else:
            k = rng.randint(-3, 3)
            for row in Q:
                row[i] += k * row[j]
    return Q


class TestCongruenceProperties(TestCase):
    def test_signature_invariant(self):
        rng = Random(SEED)
        for _ in range(50):
            n = rng.randint(2, 5)
            S = random_matrix(rng, n, n, 5)
            S = [[S[i][j] + S[j][i] for j in range(n)] for i in range(n)]
            Q = _unimodular(rng, n)
            moved = matmul(matmul(transpose(Q), S), Q)
            self.assertEqual(inertia(moved), inertia(S))
            self.assertEqual(abs(determinant(moved)), abs(determinant(S)))


class TestDiscriminantLifts(TestCase):
    def test_q_value_independent_of_lift(self):
        rng = Random(SEED)
        for expression in ("U(2)+A2+<4>", "D4(-1)", "U(3)+<-6>"):
            lattice = parse_lattice(expression)
            group = discriminant_group(lattice)
            for element in group.elements():
                expected = group.q_value(element)
                shifted = [c + rng.randint(-2, 2) * d for c, d in zip(element, group.orders)]
                self.assertEqual(group.q_value(shifted), expected)
                vector = [x + rng.randint(-5, 5) for x in group.lift(element)]
                self.assertEqual(reduce_mod(bilinear(lattice.gram, vector, vector), 2), expected, (expression, element))


SWAP_COPIES = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]

# lattice, involution, torsion of the dual modulo (1 - iota)
INVOLUTIONS = [
    ("U", [[0, 1], [1, 0]], []),
    ("U", [[-1, 0], [0, -1]], [2, 2]),
    ("U+U", SWAP_COPIES, []),
    ("U(2)+U(2)", SWAP_COPIES, []),
    ("<2>+<2>", [[0, 1], [1, 0]], []),
    ("<2>+<-2>", [[1, 0], [0, -1]], [2]),
    ("U+U", [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], [2, 2]),
]


class TestGroupActionProperties(TestCase):
    def test_invariant_orthogonal_to_coinvariant(self):
        actions = [LatticeAction(parse_lattice(expression), [iota]) for expression, iota, _ in INVOLUTIONS]
        actions.append(LatticeAction(parse_lattice("A2"), [[[0, -1], [1, -1]]]))
        actions.append(enriques_model(verify=False))
        for action in actions:
            invariant = invariant_lattice(action)
            coinvariant = coinvariant_lattice(action)
            self.assertEqual(invariant.rank + coinvariant.rank, action.lattice.rank, action)
            if invariant.rank and coinvariant.rank:
                pairing = matmul(matmul(invariant.embedding, action.lattice.gram), transpose(coinvariant.embedding))
                self.assertTrue(all(x == 0 for row in pairing for x in row), action)

    def test_torsion_exponent(self):
        for expression, iota, torsion in INVOLUTIONS:
            lattice = parse_lattice(expression)
            anti_rank = coinvariant_lattice(LatticeAction(lattice, [iota])).rank
            a = glue_exponent(lattice, iota)
            self.assertEqual(anti_invariant_torsion(lattice, iota), torsion, expression)
            self.assertEqual(len(torsion), anti_rank - a, expression)


def _random_series(rng: Random, nvars: int, trunc: int, constant: bool = True) -> MultiSeries:
    coeffs = {e: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for d in range(0 if constant else 1, trunc + 1) for e in monomials(nvars, d)}
    return MultiSeries(nvars, trunc, coeffs)


class TestSeriesRing(TestCase):
    def test_ring_axioms(self):
        rng = Random(SEED)
        for _ in range(10):
            a, b, c = (_random_series(rng, 2, 4) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)

    def test_derivative_of_exp(self):
        rng = Random(SEED)
        for _ in range(10):
            f = _random_series(rng, 2, 4, constant=False)
            for index in range(2):
                self.assertEqual(f.exp().derivative(index), f.derivative(index) * f.exp())
