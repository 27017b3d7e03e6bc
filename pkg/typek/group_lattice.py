"""
Finite groups acting on lattices by Gram preserving integer matrices.

A matrix ``g`` acts on coordinate column vectors, ``x -> g x``; it preserves
the lattice when ``g^T G g = G``.
"""
from typing import Dict, List, Optional, Sequence, Tuple
from sympy import Poly, Symbol, cyclotomic_poly, totient
from typek.disc_forms import fingerprints_equal
from typek.errors import GuardExceeded, LatticeError, PreconditionError, VerificationFailure
from typek.exact_linalg import IntMatrix, identity, matmul, smith_normal_form, transpose, saturated_kernel
from typek.lattice import Lattice, orthogonal_complement, parse_lattice, sublattice
from typek.settings import GROUP_ORDER_GUARD
from typek.utils import get_logger

logger = get_logger(__name__)

ENRIQUES_INVARIANT = "U(2)+E8(-2)"
ENRIQUES_COINVARIANT = "U+U(2)+E8(-2)"


def _key(matrix: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in matrix)


def preserves_form(lattice: Lattice, g: IntMatrix) -> bool:
    return matmul(matmul(transpose(g), lattice.gram), g) == lattice.gram


class LatticeAction:
    """
    A finite group given by generators acting on ``lattice``.
    """

    def __init__(self, lattice: Lattice, generators: Sequence[IntMatrix]):
        n = lattice.rank
        for index, g in enumerate(generators):
            if len(g) != n or any(len(row) != n for row in g):
                raise LatticeError(f"generator {index} is not a {n}x{n} matrix")
            if not preserves_form(lattice, g):
                raise LatticeError(f"generator {index} does not preserve the form of {lattice}")
        self.lattice = lattice
        self.generators = [[list(row) for row in g] for g in generators]

    def elements(self) -> List[IntMatrix]:
        """
        All group elements, found by closing the generators under products.
        """
        one = identity(self.lattice.rank)
        seen = {_key(one): one}
        frontier = [one]
        while frontier:
            new = []
            for element in frontier:
                for g in self.generators:
                    product = matmul(g, element)
                    key = _key(product)
                    if key not in seen:
                        seen[key] = product
                        new.append(product)
                        if len(seen) > GROUP_ORDER_GUARD:
                            raise GuardExceeded("group closure", len(seen), GROUP_ORDER_GUARD)
            frontier = new
        return list(seen.values())

    def order(self) -> int:
        return len(self.elements())

    def to_json(self) -> dict:
        return {"lattice": self.lattice.to_json(), "generators": self.generators}

    @classmethod
    def from_json(cls, data: dict) -> 'LatticeAction':
        return cls(Lattice.from_json(data["lattice"]), data["generators"])

    def __repr__(self):
        return f"<LatticeAction on {self.lattice} with {len(self.generators)} generators>"


def _fixed_basis(lattice: Lattice, generators: Sequence[IntMatrix]) -> IntMatrix:
    n = lattice.rank
    one = identity(n)
    stacked = [[g[i][j] - one[i][j] for j in range(n)] for g in generators for i in range(n)]
    return saturated_kernel(stacked, n)


def invariant_lattice(action: LatticeAction) -> Lattice:
    return sublattice(action.lattice, _fixed_basis(action.lattice, action.generators))


def coinvariant_lattice(action: LatticeAction) -> Lattice:
    return orthogonal_complement(action.lattice, _fixed_basis(action.lattice, action.generators))


def _check_involution(lattice: Lattice, involution: IntMatrix):
    if not preserves_form(lattice, involution):
        raise LatticeError("the involution does not preserve the form")
    n = lattice.rank
    if matmul(involution, involution) != identity(n):
        raise LatticeError("the matrix is not an involution")
    if involution == identity(n):
        raise PreconditionError("the involution acts trivially")


def enriques_model(verify: bool = True) -> LatticeAction:
    """
    The involution on U + U + U + E8(-1) + E8(-1) negating the first U,
    swapping the other two copies of U and swapping the two copies of E8(-1).
    """
    k3 = parse_lattice("K3")
    n = k3.rank
    iota = [[0] * n for _ in range(n)]
    iota[0][0] = iota[1][1] = -1
    for i in range(2):
        iota[2 + i][4 + i] = iota[4 + i][2 + i] = 1
    for i in range(8):
        iota[6 + i][14 + i] = iota[14 + i][6 + i] = 1
    action = LatticeAction(k3, [iota])
    if verify:
        problems = check_enriques(action)
        if problems:
            raise VerificationFailure(f"Enriques model: {'; '.join(problems)}")
    return action


def compare_lattices(got: Lattice, expected: Lattice, with_fingerprint: bool = True) -> List[str]:
    """
    returns:
        descriptions of the invariants in which ``got`` differs from ``expected``
    """
    problems = []
    if got.rank != expected.rank:
        problems.append(f"rank {got.rank} != {expected.rank}")
    if got.signature() != expected.signature():
        problems.append(f"signature {got.signature()} != {expected.signature()}")
    if abs(got.disc()) != abs(expected.disc()):
        problems.append(f"|disc| {abs(got.disc())} != {abs(expected.disc())}")
    if got.is_even() != expected.is_even():
        problems.append("parity differs")
    if with_fingerprint and not problems and not fingerprints_equal(got, expected):
        problems.append("discriminant form fingerprints differ")
    return problems


def check_enriques(action: LatticeAction) -> List[str]:
    problems = []
    iota = action.generators[0]
    if matmul(iota, iota) != identity(action.lattice.rank):
        problems.append("iota^2 != 1")
    problems += [f"invariant: {p}" for p in compare_lattices(invariant_lattice(action), parse_lattice(ENRIQUES_INVARIANT))]
    problems += [f"coinvariant: {p}" for p in compare_lattices(coinvariant_lattice(action), parse_lattice(ENRIQUES_COINVARIANT))]
    return problems


def glue_exponent(lattice: Lattice, involution: IntMatrix) -> int:
    """
    The exponent a with lattice / (anti-invariant + invariant) = Z2^a.
    """
    if not lattice.is_nondegenerate():
        raise PreconditionError(f"{lattice} is degenerate")
    _check_involution(lattice, involution)
    invariant = _fixed_basis(lattice, [involution])
    anti = saturated_kernel([list(row) for row in _plus_identity(involution)], lattice.rank)
    stacked = invariant + anti
    divisors = smith_normal_form(stacked).divisors
    if len(divisors) != lattice.rank or any(d not in (1, 2) for d in divisors):
        raise VerificationFailure(f"glue group is not 2-elementary: divisors {divisors}")
    return divisors.count(2)


def _plus_identity(g: IntMatrix) -> IntMatrix:
    return [[g[i][j] + int(i == j) for j in range(len(g))] for i in range(len(g))]


def anti_invariant_torsion(lattice: Lattice, involution: IntMatrix) -> List[int]:
    """
    Torsion of the dual lattice modulo {x - iota x}.

    The dual action of an involution in dual coordinates is its transpose.

    returns:
        the invariant factors of the torsion, each equal to 2
    """
    _check_involution(lattice, involution)
    n = lattice.rank
    dual = transpose(involution)
    relations = [[int(i == j) - dual[i][j] for j in range(n)] for i in range(n)]
    torsion = [d for d in smith_normal_form(relations).divisors if d > 1]
    if any(d != 2 for d in torsion):
        raise VerificationFailure(f"torsion {torsion} is not 2-elementary")
    anti_rank = n - len(_fixed_basis(lattice, [involution]))
    a = glue_exponent(lattice, involution)
    if len(torsion) != anti_rank - a:
        raise VerificationFailure(f"torsion exponent {len(torsion)} != rank {anti_rank} - a {a}")
    logger.debug(f"anti-invariant torsion Z2^{len(torsion)} with a = {a}")
    return torsion


def cyclotomic_value_at_one(d: int) -> int:
    x = Symbol('x')
    return int(Poly(cyclotomic_poly(d, x), x).eval(1))


class EigenvalueMultiset:
    """
    Eigenvalues of a finite order isometry grouped into Galois orbits:
    ``(d, m)`` means every primitive d-th root of unity occurs m times.
    """

    def __init__(self, pairs: Sequence[Tuple[int, int]]):
        for d, m in pairs:
            if d < 1 or m < 0:
                raise ValueError(f"invalid eigenvalue orbit {(d, m)}")
        self.pairs = [(int(d), int(m)) for d, m in pairs]

    def total(self) -> int:
        return sum(m * int(totient(d)) for d, m in self.pairs)

    def __repr__(self):
        return f"<EigenvalueMultiset {self.pairs}>"


def coinv_det(eigenvalues: EigenvalueMultiset) -> int:
    """
    det(1 - h) on the coinvariant lattice: prod of Phi_d(1)^m.
    """
    result = 1
    for d, m in eigenvalues.pairs:
        if d == 1 and m:
            raise PreconditionError("eigenvalue 1 makes 1 - h singular")
        result *= cyclotomic_value_at_one(d) ** m
    return result


def action_summary(action: LatticeAction, involution: Optional[IntMatrix] = None) -> Dict[str, object]:
    invariant = invariant_lattice(action)
    coinvariant = coinvariant_lattice(action)
    summary: Dict[str, object] = {
        "invariant_rank": invariant.rank,
        "invariant_signature": invariant.signature(),
        "invariant_disc": abs(invariant.disc()),
        "coinvariant_rank": coinvariant.rank,
        "coinvariant_signature": coinvariant.signature(),
        "coinvariant_disc": abs(coinvariant.disc()),
    }
    if involution is not None:
        summary["a"] = glue_exponent(action.lattice, involution)
        summary["torsion"] = anti_invariant_torsion(action.lattice, involution)
    return summary
