"""
The classification tables of Calabi-Yau threefolds of type K and the drivers
that verify them: rational duality of M_G and N_G, the Brauer group exponent,
the trilinear form of type L, the second Chern class coefficient and the
tube domain and elliptic mirror maps.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
from sympy import I, Rational, conjugate, expand, im, re
from typek.errors import FixtureError, PreconditionError, VerificationFailure
from typek.exact_linalg import block_diagonal
from typek.group_lattice import EigenvalueMultiset, coinv_det
from typek.lattice import Lattice, hyperbolic_plane, orthogonal_complement, parse_lattice, summand_basis, direct_sum
from typek.quad_space import QEquivalence, q_equivalent
from typek.storage import load_tables
from typek.utils import get_logger

logger = get_logger(__name__)

GROUP_TAGS = ["C2", "C2xC2", "C2xC2xC2", "D6", "D8", "D10", "D12", "C2xD8"]


class TypeKRecord:
    """
    One row of the classification: G = H x| C2 with its lattices M_G and N_G.
    """

    def __init__(self, data: dict):
        self.tag: str = data["tag"]
        self.order: int = data["order"]
        self.h: str = data["H"]
        self.h_cyclic: bool = data["h_cyclic"]
        self.m_expr: str = data["M_G"]
        self.n_expr: str = data["N_G"]
        self.disc_lambda_h: int = data["disc_lambda_H"]
        self.disc_m: int = data["disc_M"]
        self.disc_n: int = data["disc_N"]
        self.hodge_h11: int = data["hodge_h11"]
        self.expected_a: int = data["expected_a"]
        self.expected_rank: int = data["expected_rank"]
        self.expected_n: int = data["expected_n"]
        self.expected_m: int = data["expected_m"]

    @property
    def M(self) -> Lattice:
        return parse_lattice(self.m_expr)

    @property
    def N(self) -> Lattice:
        return parse_lattice(self.n_expr)

    def __repr__(self):
        return f"<TypeKRecord {self.tag}: M_G={self.m_expr} N_G={self.n_expr}>"


class SymplecticRecord:
    """
    Invariant lattice of a symplectic action on the K3 lattice.
    """

    def __init__(self, data: dict):
        self.groups: List[str] = data["groups"]
        self.expr: str = data["expr"]
        self.rank: int = data["rank"]
        self.disc: int = data["disc"]
        self.note: Optional[str] = data.get("note")

    @property
    def lattice(self) -> Lattice:
        return parse_lattice(self.expr)

    def __repr__(self):
        return f"<SymplecticRecord {'/'.join(self.groups)}: {self.expr}>"


class Tables:
    def __init__(self,
                 records: Dict[str, TypeKRecord],
                 symplectic: List[SymplecticRecord],
                 eigenvalues: List[Tuple[str, EigenvalueMultiset, int]],
                 noncyclic: List[dict]):
        self.records = records
        self.symplectic = symplectic
        self.eigenvalues = eigenvalues
        self.noncyclic = noncyclic


def _check_disc(what: str, expr: str, stored: int):
    computed = abs(parse_lattice(expr).disc())
    if computed != stored:
        raise FixtureError(f"{what}: stored |disc| {stored} but {expr} has |disc| {computed}")


def build_tables(data: dict) -> Tables:
    """
    Turn the JSON fixture into records, recomputing every stored discriminant.
    """
    try:
        records = {row["tag"]: TypeKRecord(row) for row in data["groups"]}
        symplectic = [SymplecticRecord(row) for row in data["symplectic"]]
        eigenvalues = [(row["H"], EigenvalueMultiset(row["orbits"]), row["det"])
                       for row in data["coinvariant_eigenvalues"]]
        noncyclic = list(data["noncyclic_glue"])
    except (KeyError, TypeError) as e:
        raise FixtureError(f"malformed tables: missing {e}")

    by_group = {g: s for s in symplectic for g in s.groups}
    for s in symplectic:
        _check_disc(f"symplectic {'/'.join(s.groups)}", s.expr, s.disc)
    for record in records.values():
        _check_disc(f"M_G of {record.tag}", record.m_expr, record.disc_m)
        _check_disc(f"N_G of {record.tag}", record.n_expr, record.disc_n)
        if record.h not in by_group:
            raise FixtureError(f"no symplectic lattice for H = {record.h}")
        if by_group[record.h].disc != record.disc_lambda_h:
            raise FixtureError(f"{record.tag}: disc of Lambda^H {record.disc_lambda_h} "
                               f"differs from the symplectic table {by_group[record.h].disc}")
    logger.debug(f"fixtures verified: {len(records)} groups, {len(symplectic)} symplectic lattices")
    return Tables(records, symplectic, eigenvalues, noncyclic)


@lru_cache(maxsize=1)
def tables() -> Tables:
    data = load_tables()
    if not data:
        raise FixtureError("classification tables could not be loaded")
    return build_tables(data)


def records() -> List[TypeKRecord]:
    found = tables().records
    return [found[tag] for tag in GROUP_TAGS if tag in found]


def record(tag: str) -> TypeKRecord:
    try:
        return tables().records[tag]
    except KeyError:
        raise PreconditionError(f"unknown group {tag!r}, expected one of {', '.join(GROUP_TAGS)}")


def symplectic_table() -> List[SymplecticRecord]:
    return list(tables().symplectic)


def symplectic_record(group: str) -> SymplecticRecord:
    for s in tables().symplectic:
        if group in s.groups:
            return s
    raise PreconditionError(f"no symplectic lattice for {group!r}")


def record_problems(r: TypeKRecord) -> List[str]:
    """
    M_G is even of signature (1, rank - 1) and N_G even of signature (2, rank - 2).
    """
    problems = []
    for name, lattice, positive in (("M_G", r.M, 1), ("N_G", r.N, 2)):
        if not lattice.is_even():
            problems.append(f"{name} is not even")
        expected = (positive, lattice.rank - positive)
        if lattice.signature() != expected:
            problems.append(f"{name} has signature {lattice.signature()} != {expected}")
    return problems


def symplectic_problems(s: SymplecticRecord) -> List[str]:
    lattice = s.lattice
    problems = []
    if lattice.rank != s.rank:
        problems.append(f"rank {lattice.rank} != {s.rank}")
    if not lattice.is_even():
        problems.append("not even")
    if lattice.signature() != (3, s.rank - 3):
        problems.append(f"signature {lattice.signature()} != (3, {s.rank - 3})")
    return problems


class DualityVerdict:
    def __init__(self, rational: QEquivalence, integral: Optional[bool]):
        self.rational = rational
        self.integral = integral

    def __bool__(self):
        return bool(self.rational) and self.integral is not False


def verify_duality(tag: str) -> DualityVerdict:
    """
    Compare U + M_G with N_G over Q; for G = C2 also compare Gram matrices.
    """
    r = record(tag)
    left = direct_sum(parse_lattice("U"), r.M)
    right = r.N
    rational = q_equivalent(left, right)
    integral = left.gram == right.gram if tag == "C2" else None
    return DualityVerdict(rational, integral)


class BrauerRow:
    def __init__(self, disc_h: int, disc_m: int, disc_n: int, a: int, rank: int, n: int, m: int):
        self.disc_h = disc_h
        self.disc_m = disc_m
        self.disc_n = disc_n
        self.a = a
        self.rank = rank
        self.n = n
        self.m = m

    def as_tuple(self) -> Tuple[int, ...]:
        return self.disc_h, self.disc_m, self.disc_n, self.a, self.rank, self.n, self.m

    def __str__(self):
        return (f"|disc L^H|={self.disc_h} |disc M|={self.disc_m} |disc N|={self.disc_n} "
                f"a={self.a} rank={self.rank} n={self.n} m={self.m}")


def brauer_m(tag: str) -> BrauerRow:
    """
    Br(X) = Z2^m with |disc M| |disc N| / |disc L^H| = 2^(2a), n = rank N - a, m = n - 1.
    """
    r = record(tag)
    disc_m = abs(r.M.disc())
    disc_n = abs(r.N.disc())
    ratio = Fraction(disc_m * disc_n, r.disc_lambda_h)
    if ratio.denominator != 1 or ratio.numerator & (ratio.numerator - 1):
        raise VerificationFailure(f"{tag}: glue ratio {ratio} is not a power of 2")
    exponent = ratio.numerator.bit_length() - 1
    if exponent % 2:
        raise VerificationFailure(f"{tag}: glue ratio {ratio} is not a power of 4")
    a = exponent // 2
    rank = r.N.rank
    n = rank - a
    if n < 0:
        raise VerificationFailure(f"{tag}: negative torsion exponent {n}")
    row = BrauerRow(r.disc_lambda_h, disc_m, disc_n, a, rank, n, n - 1)
    if row.m != r.expected_m:
        raise VerificationFailure(f"{tag}: m = {row.m} but the table says {r.expected_m}")
    return row


def h1_exponent(tag: str) -> int:
    """
    Number of Z2 summands of H_1(X, Z) = Br(X) + Z2^2.
    """
    return brauer_m(tag).m + 2


def hodge_numbers(tag: str) -> Tuple[int, int]:
    """
    returns:
        (h11, h21) = (rank M_G + 1, rank N_G - 1)
    """
    r = record(tag)
    return r.M.rank + 1, r.N.rank - 1


def hodge_check(tag: str) -> List[str]:
    """
    Both Hodge numbers agree with the printed h11 (the threefolds are self-mirror).
    """
    h11, h21 = hodge_numbers(tag)
    printed = record(tag).hodge_h11
    problems = []
    if h11 != printed:
        problems.append(f"h11 = rank M_G + 1 = {h11} != {printed}")
    if h21 != printed:
        problems.append(f"h21 = rank N_G - 1 = {h21} != {printed}")
    return problems


def lcsl_check(tag: str) -> QEquivalence:
    """
    Split the first U(k) summand off N_G and compare its complement with M_G.
    """
    r = record(tag)
    n_lattice = r.N
    first = n_lattice.summands[0] if n_lattice.summands else None
    if first is None or first.kind != "U":
        raise VerificationFailure(f"{tag}: N_G = {r.n_expr} does not start with U(k)")
    complement = orthogonal_complement(n_lattice, summand_basis(n_lattice, 0))
    return q_equivalent(complement, r.M)


def lcsl_scale(tag: str) -> int:
    n_lattice = record(tag).N
    assert n_lattice.summands is not None
    return n_lattice.summands[0].scale


def noncyclic_glue_ratio(k: str, h: str) -> Fraction:
    """
    2^r |disc L^K| / |disc L^H| for H = C2 x K, with r = rank L^K - rank L^H.
    """
    big = symplectic_record(k).lattice
    small = symplectic_record(h).lattice
    r = big.rank - small.rank
    return Fraction(2 ** r * abs(big.disc()), abs(small.disc()))


def coinvariant_rank_problems(h: str, eigenvalues: EigenvalueMultiset, det: int) -> List[str]:
    invariant = symplectic_record(h).lattice
    problems = []
    if eigenvalues.total() != 22 - invariant.rank:
        problems.append(f"eigenvalue count {eigenvalues.total()} != 22 - {invariant.rank}")
    value = coinv_det(eigenvalues)
    if value != det:
        problems.append(f"det {value} != printed {det}")
    if value != abs(invariant.disc()):
        problems.append(f"det {value} != |disc L^H| {abs(invariant.disc())}")
    return problems


def coinvariant_rank_check(h: str) -> List[str]:
    for name, eigenvalues, det in tables().eigenvalues:
        if name == h:
            return coinvariant_rank_problems(h, eigenvalues, det)
    raise PreconditionError(f"no eigenvalue data for {h!r}")


class TrilinearTypeL:
    """
    The symmetric trilinear form on L + Z given by mu(a, b, n) = n <a, b>.

    Arguments are pairs (vector in L, integer).
    """

    def __init__(self, lattice: Lattice):
        self.lattice = lattice

    def __call__(self, x: Tuple[Sequence[int], int], y: Tuple[Sequence[int], int], z: Tuple[Sequence[int], int]) -> int:
        (ax, nx), (ay, ny), (az, nz) = x, y, z
        pair = self.lattice.pairing
        return nz * pair(ax, ay) + ny * pair(ax, az) + nx * pair(ay, az)

    def evaluate(self, alpha: Sequence[int], beta: Sequence[int], n: int) -> int:
        zero = [0] * self.lattice.rank
        return self((alpha, 0), (beta, 0), (zero, n))


def mu_typeL(lattice: Lattice) -> TrilinearTypeL:
    return TrilinearTypeL(lattice)


def type_l_lattice(tag: str) -> Lattice:
    """
    M_G(1/2), integral because every Gram entry of M_G is even.
    """
    m = record(tag).M
    if any(x % 2 for row in m.gram for x in row):
        raise VerificationFailure(f"{tag}: M_G(1/2) is not integral")
    return Lattice([[x // 2 for x in row] for row in m.gram], label=f"({m.label})(1/2)")


def mu_X_eval(tag: str, gamma1: Sequence[int], gamma2: Sequence[int], n: int) -> Fraction:
    return Fraction(n, 2) * record(tag).M.pairing(gamma1, gamma2)


def c2_coeff(tag: str) -> Fraction:
    return Fraction(24, record(tag).order)


class PeriodVector:
    """
    A vector of (U + M_G) tensor C with Gaussian rational coordinates
    (e, f, then the coordinates of M_G).
    """

    def __init__(self, gram: List[List[int]], coordinates: list):
        self.gram = gram
        self.coordinates = coordinates

    def pairing(self, other: 'PeriodVector'):
        total = 0
        for i, x in enumerate(self.coordinates):
            for j, y in enumerate(other.coordinates):
                if self.gram[i][j]:
                    total += x * self.gram[i][j] * y
        return expand(total)

    def conjugate(self) -> 'PeriodVector':
        return PeriodVector(self.gram, [conjugate(x) for x in self.coordinates])

    def as_pairs(self) -> List[Tuple[Fraction, Fraction]]:
        return [(_fraction(re(x)), _fraction(im(x))) for x in self.coordinates]


def _rational(value) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def tube_domain_period(tag: str, b: Sequence[Fraction], kappa: Sequence[Fraction]) -> PeriodVector:
    """
    omega = e - <Z, Z>/2 f + Z for Z = B + i kappa.
    """
    m = record(tag).M
    if len(b) != m.rank or len(kappa) != m.rank:
        raise PreconditionError(f"B and kappa need {m.rank} coordinates")
    kappa_square = sum(Fraction(kappa[i]) * m.gram[i][j] * Fraction(kappa[j])
                       for i in range(m.rank) for j in range(m.rank))
    if kappa_square <= 0:
        raise PreconditionError(f"kappa^2 = {kappa_square} is not positive")
    z = [_rational(x) + I * _rational(y) for x, y in zip(b, kappa)]
    z_square = expand(sum(z[i] * m.gram[i][j] * z[j] for i in range(m.rank) for j in range(m.rank)))
    gram = block_diagonal(hyperbolic_plane(), m.gram)
    return PeriodVector(gram, [Rational(1), expand(-z_square / 2)] + z)


def elliptic_mirror(b: Fraction, kappa: Fraction) -> Tuple[Fraction, Fraction]:
    """
    returns:
        tau = B + i kappa as the pair (real part, imaginary part)
    """
    if kappa <= 0:
        raise PreconditionError(f"kappa = {kappa} is not positive")
    return Fraction(b), Fraction(kappa)


def elliptic_mirror_inverse(tau: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    return tau[0], tau[1]
