"""
Discriminant groups A(L) = L^v / L of even lattices, their finite quadratic
forms with values in Q/2Z, fingerprints for comparing such forms, and
overlattices built from isotropic subgroups.
"""
from collections import Counter
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterator, List, Sequence, Tuple
from typek.errors import GuardExceeded, LatticeError
from typek.exact_linalg import hermite_normal_form, smith_normal_form
from typek.lattice import Lattice
from typek.settings import DISC_GROUP_GUARD, FINGERPRINT_GUARD
from typek.utils import get_logger

logger = get_logger(__name__)

Element = Tuple[int, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def reduce_mod(value: Fraction, modulus: int) -> Fraction:
    """
    Representative of ``value`` in [0, modulus).
    """
    return value - modulus * (value.numerator // (modulus * value.denominator))


class DiscGroup:
    """
    The discriminant group of an even nondegenerate lattice.

    Generator ``i`` is the class of ``lifts[i]`` (coordinates in L tensor Q)
    and has order ``orders[i]``; ``orders`` is the list of elementary divisors
    of the Gram matrix that are at least 2.
    """

    def __init__(self, lattice: Lattice, orders: List[int], lifts: List[List[Fraction]]):
        self.lattice = lattice
        self.orders = orders
        self.lifts = lifts
        gram = lattice.gram
        self.form = [[sum(x * gram[i][j] * y[j] for i, x in enumerate(u) if x for j in range(len(y)) if y[j])
                      for y in lifts] for u in lifts]

    @property
    def size(self) -> int:
        return reduce(lambda a, b: a * b, self.orders, 1)

    def lift(self, element: Sequence[int]) -> List[Fraction]:
        vector = [Fraction(0)] * self.lattice.rank
        for c, lift in zip(element, self.lifts):
            if c:
                vector = [v + c * x for v, x in zip(vector, lift)]
        return vector

    def q_value(self, element: Sequence[int]) -> Fraction:
        """
        returns:
            the self pairing of a lift of ``element``, in [0, 2)
        """
        total = Fraction(0)
        for i, ci in enumerate(element):
            if not ci:
                continue
            total += ci * ci * self.form[i][i]
            for j in range(i + 1, len(element)):
                if element[j]:
                    total += 2 * ci * element[j] * self.form[i][j]
        return reduce_mod(total, 2)

    def b_value(self, first: Sequence[int], second: Sequence[int]) -> Fraction:
        total = sum((ci * cj * self.form[i][j] for i, ci in enumerate(first) if ci
                     for j, cj in enumerate(second) if cj), Fraction(0))
        return reduce_mod(total, 1)

    def element_order(self, element: Sequence[int]) -> int:
        order = 1
        for c, d in zip(element, self.orders):
            order = _lcm(order, d // gcd(d, c % d))
        return order

    def normalize(self, element: Sequence[int]) -> Element:
        return tuple(c % d for c, d in zip(element, self.orders))

    def add(self, first: Sequence[int], second: Sequence[int]) -> Element:
        return self.normalize([a + b for a, b in zip(first, second)])

    def elements(self) -> Iterator[Element]:
        if self.size > FINGERPRINT_GUARD:
            raise GuardExceeded(f"discriminant group of {self.lattice}", self.size, FINGERPRINT_GUARD)
        return product(*[range(d) for d in self.orders])

    def subgroup(self, generators: Sequence[Sequence[int]]) -> List[Element]:
        """
        All elements of the subgroup generated by ``generators``.
        """
        zero = tuple(0 for _ in self.orders)
        seen = {zero}
        frontier = [zero]
        gens = [self.normalize(g) for g in generators]
        while frontier:
            new = []
            for element in frontier:
                for g in gens:
                    candidate = self.add(element, g)
                    if candidate not in seen:
                        seen.add(candidate)
                        new.append(candidate)
            frontier = new
        return sorted(seen)

    def __repr__(self):
        return f"<DiscGroup {self.orders} of {self.lattice}>"


def discriminant_group(lattice: Lattice) -> DiscGroup:
    if not lattice.is_even():
        raise LatticeError(f"{lattice} is not even")
    disc = lattice.disc()
    if disc == 0:
        raise LatticeError(f"{lattice} is degenerate")
    if abs(disc) > DISC_GROUP_GUARD:
        raise GuardExceeded(f"discriminant of {lattice}", abs(disc), DISC_GROUP_GUARD)
    snf = smith_normal_form(lattice.gram)
    orders = []
    lifts = []
    for i, d in enumerate(snf.divisors):
        if d >= 2:
            orders.append(d)
            lifts.append([Fraction(snf.V[k][i], d) for k in range(lattice.rank)])
    return DiscGroup(lattice, orders, lifts)


def q_value(group: DiscGroup, element: Sequence[int]) -> Fraction:
    return group.q_value(element)


class FqfFingerprint:
    """
    Group type plus the multiset of (element order, q value) pairs.
    """

    def __init__(self, group_type: List[int], values: Counter):
        self.group_type = group_type
        self.values = values

    def negated(self) -> 'FqfFingerprint':
        values: Counter = Counter()
        for (order, q), count in self.values.items():
            values[(order, reduce_mod(-q, 2))] += count
        return FqfFingerprint(self.group_type, values)

    def __eq__(self, other):
        return isinstance(other, FqfFingerprint) and self.group_type == other.group_type and self.values == other.values

    def to_json(self) -> dict:
        return {
            "group_type": self.group_type,
            "values": [[order, str(q), count] for (order, q), count in sorted(self.values.items())],
        }

    def __repr__(self):
        return f"<FqfFingerprint {self.group_type}>"


def fingerprint(lattice: Lattice) -> FqfFingerprint:
    group = discriminant_group(lattice)
    values: Counter = Counter()
    for element in group.elements():
        values[(group.element_order(element), group.q_value(element))] += 1
    return FqfFingerprint(sorted(group.orders), values)


def fingerprints_equal(first: Lattice, second: Lattice, negate: bool = False) -> bool:
    """
    Compare (A(first), q) with (A(second), q) or with (A(second), -q).

    Equal fingerprints are a necessary condition for an isometry of the
    finite quadratic forms, not a sufficient one.
    """
    left = fingerprint(first)
    right = fingerprint(second)
    if negate:
        right = right.negated()
    return left == right


def overlattice(lattice: Lattice, generators: Sequence[Sequence[int]]) -> Lattice:
    """
    The even overlattice M with M / L the subgroup W generated by ``generators``.

    args:
        lattice: even nondegenerate lattice L
        generators: elements of A(L) as coefficient tuples
    returns:
        the lattice M; its Gram matrix is taken in a Hermite basis of M
    """
    group = discriminant_group(lattice)
    for i, w in enumerate(generators):
        if group.q_value(w) != 0:
            raise LatticeError(f"element {tuple(w)} is not isotropic, q = {group.q_value(w)}")
        for v in generators[i + 1:]:
            if group.b_value(w, v) != 0:
                raise LatticeError(f"elements {tuple(w)} and {tuple(v)} pair to {group.b_value(w, v)}")
    order = len(group.subgroup(generators))

    n = lattice.rank
    vectors = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    vectors += [group.lift(w) for w in generators]
    denominator = reduce(_lcm, (x.denominator for v in vectors for x in v), 1)
    scaled = [[int(x * denominator) for x in v] for v in vectors]
    basis = [[Fraction(x, denominator) for x in row] for row in hermite_normal_form(scaled)]

    gram = [[sum(x * lattice.gram[i][j] * y[j] for i, x in enumerate(u) if x for j in range(n) if y[j])
             for y in basis] for u in basis]
    if any(entry.denominator != 1 for row in gram for entry in row):
        raise LatticeError("overlattice Gram matrix is not integral")
    result = Lattice([[int(x) for x in row] for row in gram])
    if not result.is_even():
        raise LatticeError("overlattice is not even")
    if abs(result.disc()) * order * order != abs(lattice.disc()):
        raise LatticeError(f"|disc| {abs(result.disc())} does not match |disc L| / |W|^2 with |W| = {order}")
    logger.debug(f"overlattice of {lattice} with index {order}")
    return result
