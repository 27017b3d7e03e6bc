"""
Projective models on P1 x P1: a group acts on each factor through 2x2
matrices defined up to scalars, and bidegree (4, 4) polynomials in
(x, y; z, w) cut out the branching curve.

A polynomial is a dict mapping (i, j), meaning x^i y^(4-i) z^j w^(4-j), to
its coefficient. The action is (g.p)(v) = p(adj(g) v), which equals
p(g^-1 v) up to a scalar.
"""
import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
from typek.cyclotomic import (CycInt, CycMatrix, adjugate2, cyc_identity, cyc_matmul, cyc_matrix,
                              rational_blocks)
from typek.errors import PreconditionError
from typek.exact_linalg import rational_rank
from typek.utils import get_logger

logger = get_logger(__name__)

DEGREE = 4
MONOMIALS = [(i, j) for i in range(DEGREE, -1, -1) for j in range(DEGREE, -1, -1)]
_INDEX = {m: k for k, m in enumerate(MONOMIALS)}

Word = Sequence[Tuple[str, int]]
Polynomial = Dict[Tuple[int, int], int]


class ProjRep:
    """
    A pair of projective representations rho_1, rho_2 of a finitely
    presented group over Q(zeta_N).
    """

    def __init__(self, name: str, conductor: int,
                 generators: Dict[str, Tuple[CycMatrix, CycMatrix]],
                 relations: Sequence[Word]):
        self.name = name
        self.conductor = conductor
        self.generators = generators
        self.relations = [list(word) for word in relations]

    def evaluate(self, word: Word, factor: int) -> CycMatrix:
        result = cyc_identity(self.conductor, 2)
        for name, power in word:
            if name not in self.generators:
                raise PreconditionError(f"{self.name} has no generator {name!r}")
            if power < 0:
                raise PreconditionError("words use non-negative powers")
            for _ in range(power):
                result = cyc_matmul(result, self.generators[name][factor])
        return result

    def __repr__(self):
        return f"<ProjRep {self.name} over Q(zeta_{self.conductor})>"


def word_text(word: Word) -> str:
    return "".join(name if power == 1 else f"{name}^{power}" for name, power in word)


def _diag(conductor: int, a: int, b: int) -> CycMatrix:
    zero = CycInt.from_int(conductor, 0)
    return [[CycInt.zeta(conductor, a), zero], [zero, CycInt.zeta(conductor, b)]]


def _swap(conductor: int) -> CycMatrix:
    return cyc_matrix(conductor, [[0, 1], [1, 0]])


def d12_rep() -> ProjRep:
    """
    rho_i(a) = diag(zeta_12^i, zeta_12^(12-i)), rho_i(b) = [[0, 1], [1, 0]].
    """
    n = 12
    return ProjRep("D12", n,
                   {"a": (_diag(n, 1, 11), _diag(n, 2, 10)), "b": (_swap(n), _swap(n))},
                   [[("a", 6)], [("b", 2)], [("b", 1), ("a", 1), ("b", 1), ("a", 1)]])


def d8c2_rep() -> ProjRep:
    """
    rho_i(a) = diag(zeta_8, zeta_8^7), rho_i(b) the swap, rho_i(c) = diag(i^(i-1), i^(1-i)).
    """
    n = 8
    return ProjRep("D8xC2", n,
                   {"a": (_diag(n, 1, 7), _diag(n, 1, 7)),
                    "b": (_swap(n), _swap(n)),
                    "c": (_diag(n, 0, 0), _diag(n, 2, 6))},
                   [[("a", 4)], [("b", 2)], [("b", 1), ("a", 1), ("b", 1), ("a", 1)],
                    [("a", 1), ("c", 1), ("a", 3), ("c", 1)], [("b", 1), ("c", 1), ("b", 1), ("c", 1)]])


def c4_branching_rep() -> ProjRep:
    """
    (x, y, z, w) -> (zeta_8 x, zeta_8^-1 y, zeta_8^2 z, zeta_8^-2 w)
    """
    n = 8
    return ProjRep("C4", n, {"h": (_diag(n, 1, 7), _diag(n, 2, 6))}, [[("h", 4)]])


def c2_branching_rep() -> ProjRep:
    """
    The swap x <-> y, z <-> w.
    """
    n = 2
    return ProjRep("C2", n, {"s": (_swap(n), _swap(n))}, [[("s", 2)]])


def is_scalar(m: CycMatrix) -> bool:
    return m[0][1].is_zero() and m[1][0].is_zero() and m[0][0] == m[1][1] and not m[0][0].is_zero()


class Verdict:
    def __init__(self, ok: bool, problems: List[str], dimension: Optional[int] = None,
                 span_dimension: Optional[int] = None):
        self.ok = ok
        self.problems = problems
        self.dimension = dimension
        self.span_dimension = span_dimension

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"<Verdict ok={self.ok} dimension={self.dimension} problems={self.problems}>"


def relation_check(rep: ProjRep) -> Verdict:
    """
    Every relation word evaluates to a nonzero scalar matrix in both factors.
    """
    problems = []
    for word in rep.relations:
        for factor in (0, 1):
            value = rep.evaluate(word, factor)
            if not is_scalar(value):
                problems.append(f"{word_text(word)} is not scalar in rho_{factor + 1}")
    return Verdict(not problems, problems)


def sym_power(m: CycMatrix, degree: int = DEGREE) -> CycMatrix:
    """
    Matrix of p -> p(m (x, y)) on binary forms of the given degree.

    Row and column k stand for x^(degree-k) y^k.
    """
    conductor = m[0][0].conductor
    zero = CycInt.from_int(conductor, 0)
    # images of x and y as binary linear forms [coefficient of x, coefficient of y]
    x_image = [m[0][0], m[0][1]]
    y_image = [m[1][0], m[1][1]]

    def multiply(form: List[CycInt], linear: List[CycInt]) -> List[CycInt]:
        out = [zero] * (len(form) + 1)
        for k, c in enumerate(form):
            out[k] = out[k] + c * linear[0]
            out[k + 1] = out[k + 1] + c * linear[1]
        return out

    columns = []
    for k in range(degree + 1):
        form = [CycInt.from_int(conductor, 1)]
        for _ in range(degree - k):
            form = multiply(form, x_image)
        for _ in range(k):
            form = multiply(form, y_image)
        columns.append(form)
    return [[columns[col][row] for col in range(degree + 1)] for row in range(degree + 1)]


def monomial_action(rep: ProjRep, word: Word) -> CycMatrix:
    """
    25 x 25 matrix of p -> p(adj(rho_1(g)) (x, y), adj(rho_2(g)) (z, w)) on
    bidegree (4, 4) monomials ordered as ``MONOMIALS``.
    """
    first = sym_power(adjugate2(rep.evaluate(word, 0)))
    second = sym_power(adjugate2(rep.evaluate(word, 1)))
    n = len(MONOMIALS)
    result = []
    for row in range(n):
        i, j = MONOMIALS[row]
        out = []
        for col in range(n):
            k, l = MONOMIALS[col]
            out.append(first[DEGREE - i][DEGREE - k] * second[DEGREE - j][DEGREE - l])
        result.append(out)
    return result


def polynomial_vector(conductor: int, p: Polynomial) -> List[CycInt]:
    vector = [CycInt.from_int(conductor, 0) for _ in MONOMIALS]
    for m, c in p.items():
        if m not in _INDEX:
            raise PreconditionError(f"{m} is not a bidegree (4, 4) monomial")
        vector[_INDEX[m]] = vector[_INDEX[m]] + c
    return vector


def act(matrix: CycMatrix, vector: List[CycInt]) -> List[CycInt]:
    return [row[0] for row in cyc_matmul(matrix, [[x] for x in vector])]


def _coordinates(vector: List[CycInt]) -> List[Fraction]:
    return [Fraction(c) for x in vector for c in x.coeffs]


def _span_rows(conductor: int, vectors: Sequence[List[CycInt]]) -> List[List[Fraction]]:
    """
    A Q-basis zeta^k v of the Q(zeta)-span of ``vectors``.
    """
    rows = []
    for v in vectors:
        for k in range(v[0].degree):
            zeta = CycInt.zeta(conductor, k)
            rows.append(_coordinates([zeta * x for x in v]))
    return rows


_TERM = re.compile(r"\s*(\d*)\s*\*?\s*((?:[xyzw](?:\^\d+)?\s*\*?\s*)+)")


def parse_polynomial(text: str) -> Polynomial:
    """
    Parse a sum of bidegree (4, 4) terms such as "x^4z^4+y^4w^4".
    """
    result: Polynomial = {}
    position = 0
    for part in text.split("+"):
        match = _TERM.fullmatch(part.strip())
        if not match:
            raise PreconditionError(f"cannot read term {part.strip()!r} at position {position} in {text!r}")
        coeff = int(match.group(1) or 1)
        powers = dict.fromkeys("xyzw", 0)
        for var, exp in re.findall(r"([xyzw])(?:\^(\d+))?", match.group(2)):
            powers[var] += int(exp or 1)
        if powers["x"] + powers["y"] != DEGREE or powers["z"] + powers["w"] != DEGREE:
            raise PreconditionError(f"term {part.strip()!r} is not of bidegree (4, 4)")
        key = (powers["x"], powers["z"])
        result[key] = result.get(key, 0) + coeff
        position += len(part) + 1
    return result


def _span_rank(rows: list) -> int:
    return rational_rank(rows) if rows else 0


def invariant_span_check(rep: ProjRep, basis: Sequence[Polynomial], with_dimension: bool = True) -> Verdict:
    """
    Check that every generator maps the span of ``basis`` into itself and,
    optionally, that the whole space of semi-invariants with the characters
    of ``basis[0]`` has the dimension of the span.
    """
    n = rep.conductor
    vectors = [polynomial_vector(n, p) for p in basis]
    span_rows = _span_rows(n, vectors)
    base_rank = _span_rank(span_rows)
    degree = vectors[0][0].degree
    if base_rank != degree * len(basis):
        raise PreconditionError("basis polynomials are linearly dependent")
    problems = []
    equations: list = []
    for name in sorted(rep.generators):
        matrix = monomial_action(rep, [(name, 1)])
        for index, v in enumerate(vectors):
            image = act(matrix, v)
            if _span_rank(span_rows + [_coordinates(image)]) != base_rank:
                problems.append(f"{name} moves polynomial {index + 1} out of the span")
        if with_dimension:
            equations += _semi_invariant_equations(matrix, vectors[0], n)
    dimension = None
    if with_dimension and not problems:
        size = len(MONOMIALS) * degree
        dimension = (size - _span_rank(equations)) // degree
        if dimension != len(basis):
            problems.append(f"semi-invariant space has dimension {dimension}, the basis has {len(basis)} elements")
    logger.debug(f"{rep.name}: span check with {len(basis)} polynomials, problems {problems}")
    return Verdict(not problems, problems, dimension, base_rank // degree)


def _semi_invariant_equations(matrix: CycMatrix, sample: List[CycInt], conductor: int) -> list:
    """
    Rows of c M - chi I, where g.sample = (chi / c) sample.
    """
    image = act(matrix, sample)
    index = next(k for k, x in enumerate(sample) if not x.is_zero())
    c, chi = sample[index], image[index]
    if not all((c * y - chi * x).is_zero() for x, y in zip(sample, image)):
        raise PreconditionError("first basis polynomial is not a semi-invariant")
    n = len(matrix)
    shifted = [[c * matrix[i][j] - (chi if i == j else 0) for j in range(n)] for i in range(n)]
    return rational_blocks(shifted)


D12_BASIS = ["x^4z^4+y^4w^4", "x^4zw^3+y^4z^3w", "x^2y^2z^2w^2"]
D8C2_BASIS = ["x^4z^4+y^4w^4", "x^4w^4+y^4z^4", "x^2y^2z^2w^2"]
C6_BRANCHING = D12_BASIS
C4_BRANCHING = ["x^4z^3w+y^4zw^3", "x^4zw^3+y^4z^3w", "x^2y^2z^4+x^2y^2w^4", "x^2y^2z^2w^2"]


def c2_branching_family() -> List[Polynomial]:
    """
    x^i y^(4-i) z^j w^(4-j) + x^(4-i) y^i z^(4-j) w^j for even i, without repeats.
    """
    seen: List[Polynomial] = []
    for i in (0, 2, 4):
        for j in range(DEGREE + 1):
            p: Polynomial = {}
            for key in ((i, j), (DEGREE - i, DEGREE - j)):
                p[key] = p.get(key, 0) + 1
            if p not in seen:
                seen.append(p)
    return seen


def d12_generator_rep() -> ProjRep:
    """
    The cyclic group generated by the D12 element a alone.
    """
    full = d12_rep()
    return ProjRep("C6", full.conductor, {"a": full.generators["a"]}, [[("a", 6)]])
