"""
Invariants of quadratic spaces over Q: Hilbert symbols, Hasse invariants and
the resulting equivalence test (rank, signature, discriminant square class and
Hasse invariants at the finitely many relevant primes; Hilbert reciprocity
takes care of the remaining place).
"""
from fractions import Fraction
from typing import Dict, List, Sequence, Set, Tuple, Union
from sympy import factorint, legendre_symbol, primefactors
from typek.errors import LatticeError
from typek.exact_linalg import congruent_diagonalize
from typek.lattice import Lattice
from typek.utils import get_logger

logger = get_logger(__name__)

Place = Union[int, str]
REAL = "real"


def _integral_representative(a: Union[int, Fraction]) -> int:
    # a * den^2 has the same square class
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero has no square class")
    return a.numerator * a.denominator


def _split(a: int, p: int) -> Tuple[int, int]:
    exponent = 0
    while a % p == 0:
        a //= p
        exponent += 1
    return exponent, a


def hilbert_symbol(a: Union[int, Fraction], b: Union[int, Fraction], p: Place) -> int:
    """
    The Hilbert symbol (a, b)_p at a prime p or at "real".
    """
    if p == REAL:
        return -1 if a < 0 and b < 0 else 1
    assert isinstance(p, int)
    alpha, u = _split(_integral_representative(a), p)
    beta, v = _split(_integral_representative(b), p)
    if p == 2:
        def epsilon(x: int) -> int:
            return ((x - 1) // 2) % 2

        def omega(x: int) -> int:
            return ((x * x - 1) // 8) % 2

        exponent = epsilon(u) * epsilon(v) + alpha * omega(v) + beta * omega(u)
        return -1 if exponent % 2 else 1

    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre_symbol(u % p, p) ** beta * legendre_symbol(v % p, p) ** alpha


def hasse_invariant(diagonal: Sequence[Union[int, Fraction]], p: Place) -> int:
    result = 1
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            result *= hilbert_symbol(diagonal[i], diagonal[j], p)
    return result


def squarefree_part(a: Union[int, Fraction]) -> int:
    n = _integral_representative(a)
    result = -1 if n < 0 else 1
    for prime, exponent in factorint(abs(n)).items():
        if exponent % 2:
            result *= prime
    return result


def bad_primes(diagonal: Sequence[Fraction]) -> Set[int]:
    primes = {2}
    for a in diagonal:
        primes.update(primefactors(abs(_integral_representative(a))))
    return primes


class QSpaceInvariants:
    """
    Certificate describing a nondegenerate quadratic space over Q.
    """

    def __init__(self,
                 rank: int,
                 signature: Tuple[int, int],
                 disc_square_class: int,
                 hasse: Dict[int, int],
                 hasse_real: int):
        self.rank = rank
        self.signature = signature
        self.disc_square_class = disc_square_class
        self.hasse = hasse
        self.hasse_real = hasse_real

    def product_formula(self) -> int:
        result = self.hasse_real
        for value in self.hasse.values():
            result *= value
        return result

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "disc_square_class": self.disc_square_class,
            "hasse": {str(p): v for p, v in sorted(self.hasse.items())},
            "hasse_real": self.hasse_real,
        }

    def __str__(self):
        hasse = ",".join(f"{p}:{int(v):+d}" for p, v in sorted(self.hasse.items()))
        return f"rank={self.rank} sig={self.signature} d={self.disc_square_class} hasse=[{hasse}]"


def _diagonal(lattice: Lattice) -> List[Fraction]:
    _, diagonal = congruent_diagonalize(lattice.gram)
    if any(a == 0 for a in diagonal):
        raise LatticeError(f"{lattice} is degenerate")
    return diagonal


def q_invariants(lattice: Lattice, extra_primes: Sequence[int] = ()) -> QSpaceInvariants:
    diagonal = _diagonal(lattice)
    primes = bad_primes(diagonal) | set(extra_primes)
    product = Fraction(1)
    for a in diagonal:
        product *= a
    return QSpaceInvariants(
        rank=len(diagonal),
        signature=(sum(1 for a in diagonal if a > 0), sum(1 for a in diagonal if a < 0)),
        disc_square_class=squarefree_part(product) if diagonal else 1,
        hasse={p: hasse_invariant(diagonal, p) for p in sorted(primes)},
        hasse_real=hasse_invariant(diagonal, REAL),
    )


class QEquivalence:
    """
    Verdict of ``q_equivalent`` with the certificates of both spaces.
    """

    def __init__(self, equivalent: bool, first: QSpaceInvariants, second: QSpaceInvariants, reason: str):
        self.equivalent = equivalent
        self.first = first
        self.second = second
        self.reason = reason

    def __bool__(self):
        return self.equivalent

    def __str__(self):
        verdict = "equivalent" if self.equivalent else f"not equivalent ({self.reason})"
        return f"{verdict}: {self.first} | {self.second}"


def q_equivalent(first: Lattice, second: Lattice) -> QEquivalence:
    primes = bad_primes(_diagonal(first)) | bad_primes(_diagonal(second))
    left = q_invariants(first, sorted(primes))
    right = q_invariants(second, sorted(primes))
    reason = ""
    if left.rank != right.rank:
        reason = "rank"
    elif left.signature != right.signature:
        reason = "signature"
    elif left.disc_square_class != right.disc_square_class:
        reason = "discriminant square class"
    else:
        for p in sorted(primes):
            if left.hasse[p] != right.hasse[p]:
                reason = f"Hasse invariant at {p}"
                break
    logger.debug(f"q_equivalent({first}, {second}): {reason or 'equal invariants'}")
    return QEquivalence(not reason, left, right, reason)
