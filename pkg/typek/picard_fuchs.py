"""
Picard-Fuchs operators in Euler derivatives and their Frobenius solutions.

An operator is a finite sum z^alpha P_alpha(Theta) with Theta_i = z_i d/dz_i
and the monomial written to the left. Solutions near the origin are found
order by order from the joint linear constraints of all operators.

Families covered: the two parameter D12 K3 family with its theta function
mirror maps and Yukawa couplings, the three parameter D8 K3 family, and the
X1(6) elliptic family.
"""
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Dict, List, Optional, Sequence
from sympy import Poly, Rational, expand, symbols
from typek.errors import SeriesError, SolveError, VerificationFailure
from typek.qseries import (Exponent, MultiSeries, PuiseuxSeries, eta_quotient, hexagonal_lattice_sum,
                           monomials, revert_map, substitute, theta)
from typek.report import Check
from typek.utils import get_logger

logger = get_logger(__name__)

ThetaPoly = Dict[Exponent, Fraction]


def _evaluate(poly: ThetaPoly, point: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for exponent, coeff in poly.items():
        term = coeff
        for x, e in zip(point, exponent):
            if e:
                term *= x ** e
        total += term
    return total


def _differentiate(poly: ThetaPoly, index: int) -> ThetaPoly:
    result: ThetaPoly = {}
    for exponent, coeff in poly.items():
        if exponent[index]:
            lower = tuple(e - int(i == index) for i, e in enumerate(exponent))
            result[lower] = result.get(lower, 0) + coeff * exponent[index]
    return result


def _on_series(poly: ThetaPoly, f: MultiSeries) -> MultiSeries:
    return MultiSeries(f.nvars, f.trunc, {e: c * _evaluate(poly, e) for e, c in f.coeffs.items()})


class FrobeniusSolution:
    """
    Phi = sum_j log(z_j) L_j(z) + R(z).
    """

    def __init__(self, regular: MultiSeries, log_parts: Optional[Dict[int, MultiSeries]] = None):
        self.regular = regular
        self.log_parts: Dict[int, MultiSeries] = dict(log_parts or {})

    @property
    def nvars(self) -> int:
        return self.regular.nvars

    @property
    def trunc(self) -> int:
        return min([self.regular.trunc] + [part.trunc for part in self.log_parts.values()])

    def theta(self, index: int) -> 'FrobeniusSolution':
        regular = self.regular.euler(index)
        if index in self.log_parts:
            regular = regular + self.log_parts[index]
        return FrobeniusSolution(regular, {j: part.euler(index) for j, part in self.log_parts.items()})

    def is_zero(self) -> bool:
        return self.regular.is_zero() and all(part.is_zero() for part in self.log_parts.values())

    def __repr__(self):
        return f"<FrobeniusSolution log parts {sorted(self.log_parts)} trunc={self.trunc}>"


class ThetaOperator:
    def __init__(self, nvars: int, terms: Dict[Exponent, ThetaPoly], label: Optional[str] = None):
        self.nvars = nvars
        self.terms = {tuple(alpha): {tuple(e): Fraction(c) for e, c in poly.items() if c}
                      for alpha, poly in terms.items()}
        self.terms = {alpha: poly for alpha, poly in self.terms.items() if poly}
        self.label = label

    @classmethod
    def from_expr(cls, expr, zs: Sequence, thetas: Sequence, label: Optional[str] = None) -> 'ThetaOperator':
        """
        Build an operator from a sympy polynomial in z_i and Theta_i, reading
        every z monomial as standing to the left of the Theta part.
        """
        v = len(zs)
        poly = Poly(expand(expr), *zs, *thetas)
        terms: Dict[Exponent, ThetaPoly] = {}
        for monomial, coeff in poly.terms():
            alpha, theta_part = tuple(monomial[:v]), tuple(monomial[v:])
            terms.setdefault(alpha, {})[theta_part] = Fraction(int(coeff.p), int(coeff.q))
        return cls(v, terms, label)

    def on_series(self, f: MultiSeries) -> MultiSeries:
        if f.nvars != self.nvars:
            raise SeriesError(f"operator in {self.nvars} variables applied to a series in {f.nvars}")
        result = MultiSeries(f.nvars, f.trunc)
        for alpha, poly in self.terms.items():
            result = result + _on_series(poly, f).multiply_monomial(alpha)
        return result

    def apply(self, f: FrobeniusSolution) -> FrobeniusSolution:
        """
        P(Theta)(log z_j L) = log z_j P(Theta) L + (dP/dTheta_j)(Theta) L.
        """
        if f.nvars != self.nvars:
            raise SeriesError(f"operator in {self.nvars} variables applied to a solution in {f.nvars}")
        regular = MultiSeries(f.nvars, f.trunc)
        logs = {j: MultiSeries(f.nvars, f.trunc) for j in f.log_parts}
        for alpha, poly in self.terms.items():
            part = _on_series(poly, f.regular)
            for j, log_part in f.log_parts.items():
                part = part + _on_series(_differentiate(poly, j), log_part)
                logs[j] = logs[j] + _on_series(poly, log_part).multiply_monomial(alpha)
            regular = regular + part.multiply_monomial(alpha)
        return FrobeniusSolution(regular, logs)

    def __repr__(self):
        return f"<ThetaOperator {self.label or ''} nvars={self.nvars} terms={len(self.terms)}>"


def apply(op: ThetaOperator, f):
    if isinstance(f, MultiSeries):
        return op.on_series(f)
    return op.apply(f)


def _solve(ops: Sequence[ThetaOperator], trunc: int, start: Fraction,
           rhs: Optional[Sequence[MultiSeries]] = None) -> MultiSeries:
    if not ops:
        raise SeriesError("no operators to solve")
    nvars = ops[0].nvars
    zero = (0,) * nvars
    coeffs: Dict[Exponent, Fraction] = {}
    for degree in range(trunc + 1):
        for k in monomials(nvars, degree):
            equations = []
            for index, op in enumerate(ops):
                a = Fraction(0)
                b = -rhs[index][k] if rhs is not None else Fraction(0)
                for alpha, poly in op.terms.items():
                    base = tuple(x - y for x, y in zip(k, alpha))
                    if min(base) < 0:
                        continue
                    if alpha == zero:
                        a += _evaluate(poly, base)
                    elif base in coeffs:
                        b -= _evaluate(poly, base) * coeffs[base]
                equations.append((a, b))
            if degree == 0:
                value = start
            else:
                solved = [b / a for a, b in equations if a != 0]
                if not solved:
                    kind = "inconsistent" if any(b != 0 for _, b in equations) else "underdetermined"
                    raise SolveError(kind, degree, k)
                value = solved[0]
            for index, (a, b) in enumerate(equations):
                if a * value != b:
                    raise SolveError("inconsistent", degree, k,
                                     f"operator {index} needs {a} * c = {b}, other operators give c = {value}")
            if value:
                coeffs[k] = value
        logger.debug(f"solved order {degree}: {sum(1 for e in coeffs if sum(e) == degree)} nonzero coefficients")
    return MultiSeries(nvars, trunc, coeffs)


def solve_regular(ops: Sequence[ThetaOperator], trunc: int) -> MultiSeries:
    """
    The power series solution with constant term 1.
    """
    return _solve(ops, trunc, Fraction(1))


def solve_log(ops: Sequence[ThetaOperator], phi0: MultiSeries, index: int, trunc: int) -> FrobeniusSolution:
    """
    Phi_i = Phi0 log z_i + R_i with R_i(0) = 0.
    """
    phi0 = phi0.truncate(trunc)
    rhs = []
    for op in ops:
        inhomogeneous = MultiSeries(phi0.nvars, trunc)
        for alpha, poly in op.terms.items():
            inhomogeneous = inhomogeneous + _on_series(_differentiate(poly, index), phi0).multiply_monomial(alpha)
        rhs.append(inhomogeneous)
    regular = _solve(ops, trunc, Fraction(0), rhs)
    return FrobeniusSolution(regular, {index: phi0})


def residual(ops: Sequence[ThetaOperator], f) -> List:
    return [apply(op, f) for op in ops]


class MirrorMap:
    """
    q_i = z_i exp(R_i / Phi0) and its inverse z_i(q).
    """

    def __init__(self, units: List[MultiSeries]):
        self.units = units
        v = len(units)
        self.forward = [u.multiply_monomial(tuple(int(i == j) for i in range(v))) for j, u in enumerate(units)]
        self.inverse = revert_map(units)

    def round_trip(self) -> List[MultiSeries]:
        """
        q(z(q)), which equals q through the truncation
        """
        return [q.compose(self.inverse) for q in self.forward]


def mirror_maps(phi0: MultiSeries, solutions: Sequence[FrobeniusSolution]) -> MirrorMap:
    inverse0 = phi0.inverse()
    units = []
    for i, solution in enumerate(solutions):
        if set(solution.log_parts) != {i}:
            raise SeriesError(f"solution {i} is not logarithmic in z{i + 1} alone")
        units.append((solution.regular * inverse0).exp())
    return MirrorMap(units)


def _first_mismatch(name: str, got: MultiSeries, expected: MultiSeries, upto: Optional[int] = None):
    difference = got.first_difference(expected, upto)
    if difference is not None:
        e, a, b = difference
        raise VerificationFailure(f"{name}: coefficient of z^{e} is {a}, expected {b}")


# D12: two parameters on the K3 surface

def d12_operators() -> List[ThetaOperator]:
    z1, z2, t1, t2 = symbols('z1 z2 t1 t2')
    s = 4 * t1 + 4 * t2
    return [ThetaOperator.from_expr(t ** 2 - 4 * z * (s + 3) * (s + 1), [z1, z2], [t1, t2], label=f"D12 op {i + 1}")
            for i, (z, t) in enumerate(((z1, t1), (z2, t2)))]


def d12_coefficient(m: int, n: int) -> int:
    """
    (4N)! / ((2N)! m!^2 n!^2) with N = m + n
    """
    N = m + n
    return factorial(4 * N) // (factorial(2 * N) * factorial(m) ** 2 * factorial(n) ** 2)


class D12Family:
    def __init__(self, trunc: int):
        self.trunc = trunc
        self.operators = d12_operators()
        self.phi0 = solve_regular(self.operators, trunc)
        self.solutions = [solve_log(self.operators, self.phi0, i, trunc) for i in range(2)]
        self.mirror = mirror_maps(self.phi0, self.solutions)

    def dumps(self) -> Dict[str, str]:
        """
        Canonical text of every series of the family.
        """
        return {
            "Phi0": str(self.phi0),
            "R1": str(self.solutions[0].regular),
            "R2": str(self.solutions[1].regular),
            "q1": str(self.mirror.forward[0]),
            "q2": str(self.mirror.forward[1]),
            "z1(q)": self.mirror.inverse[0].to_text(["q1", "q2"]),
            "z2(q)": self.mirror.inverse[1].to_text(["q1", "q2"]),
        }


def _theta_x(trunc: int) -> PuiseuxSeries:
    """
    x(q) = theta2^8 / (theta3^4 + theta4^4)^2, exact through q^trunc
    """
    t2, t3, t4 = theta(2, trunc), theta(3, trunc), theta(4, trunc)
    f = t3 ** 4 + t4 ** 4
    return (t2 ** 8) * (f * f).inverse()


def theta_inverse_map(trunc: int) -> List[MultiSeries]:
    """
    z1 = x(q1)/64 (1 - x(q2)), z2 = x(q2)/64 (1 - x(q1)), exact through degree trunc
    """
    x = _theta_x(trunc)
    xs = [x.to_multi(i, 2).truncate(trunc) for i in range(2)]
    return [xs[0] * Fraction(1, 64) * (1 - xs[1]), xs[1] * Fraction(1, 64) * (1 - xs[0])]


def theta_period(trunc: int) -> MultiSeries:
    """
    Phi0 = 1/2 sqrt((theta3^4 + theta4^4)(q1) (theta3^4 + theta4^4)(q2))
    """
    f = theta(3, trunc) ** 4 + theta(4, trunc) ** 4
    fs = [f.to_multi(i, 2).truncate(trunc) for i in range(2)]
    return (fs[0] * fs[1]).sqrt() * Fraction(1, 2)


def verify_theta_inverse(trunc: int, family: Optional[D12Family] = None) -> D12Family:
    """
    Compare the reverted mirror map and Phi0(z(q)) with their theta function
    closed forms; raises VerificationFailure at the first differing coefficient.
    """
    if family is None:
        family = D12Family(trunc)
    inverse = family.mirror.inverse
    closed = theta_inverse_map(trunc + 1)
    for i in range(2):
        _first_mismatch(f"z{i + 1}(q)", inverse[i], closed[i])
    composed = family.phi0.compose(inverse)
    _first_mismatch("Phi0(q)", composed, theta_period(trunc))
    logger.info(f"theta inverse mirror maps agree through degree {trunc}")
    return family


def yukawa_discriminant(z1: MultiSeries, z2: MultiSeries) -> MultiSeries:
    return 1 - 128 * (z1 + z2) - 8192 * z1 * z2 + 4096 * (z1 * z1 + z2 * z2)


class YukawaResult:
    def __init__(self, raw: List[List[MultiSeries]], constant: Fraction):
        self.raw = raw
        self.constant = constant
        self.normalized = [[entry * (1 / constant) for entry in row] for row in raw]

    def gram(self) -> List[List[Fraction]]:
        return [[entry.constant_term for entry in row] for row in self.normalized]


def yukawa_check(trunc: int, family: Optional[D12Family] = None) -> YukawaResult:
    """
    K_ij = Phi0^-2 sum_kl C_kl (q_i d z_k/d q_i)(q_j d z_l/d q_j) for the D12 family.

    With z_i = q_i a_i(q) the poles of C_ii ~ 1/z_i and C_12 ~ 1/(z1 z2) cancel
    against the factors q_i in the derivatives, so every term is a power series.
    """
    if family is None:
        family = D12Family(trunc)
    z = family.mirror.inverse
    a = [z[i].divide_variable(i) for i in range(2)]
    inverse_a = [x.inverse() for x in a]
    # derivative of z_k along t_i divided by q_k: d[k][i]
    d = [[a[k] * int(i == k) + a[k].euler(i) for i in range(2)] for k in range(2)]
    z1, z2 = (x.truncate(trunc) for x in z)
    p = 1 - 64 * (z1 + z2)
    denominator = (family.phi0.compose(z) ** 2 * yukawa_discriminant(z1, z2)).inverse()

    def entry(i: int, j: int) -> MultiSeries:
        first = (d[0][i] * d[0][j] * inverse_a[0]).multiply_monomial((1, 0)) * Fraction(1, 32)
        cross = (d[0][i] * d[1][j] + d[1][i] * d[0][j]) * p * inverse_a[0] * inverse_a[1] * Fraction(1, 4096)
        second = (d[1][i] * d[1][j] * inverse_a[1]).multiply_monomial((0, 1)) * Fraction(1, 32)
        return (first + cross + second) * denominator

    raw = [[entry(i, j) for j in range(2)] for i in range(2)]
    for i in range(2):
        if not raw[i][i].is_zero():
            e, c, _ = raw[i][i].first_difference(MultiSeries(2, trunc))  # type: ignore
            raise VerificationFailure(f"K{i + 1}{i + 1} has coefficient {c} at q^{e}")
    constant = raw[0][1].constant_term
    if constant == 0:
        raise VerificationFailure("K12 vanishes at the origin")
    difference = raw[0][1].first_difference(MultiSeries.constant(constant, 2, trunc))
    if difference is not None:
        e, c, _ = difference
        raise VerificationFailure(f"K12 is not constant: coefficient {c} at q^{e}")
    logger.info(f"Yukawa couplings: K11 = K22 = 0, K12 = {constant} through degree {trunc}")
    return YukawaResult(raw, constant)


# D8: three parameters on the K3 surface

def d8_expression(a: Sequence):
    z1, z2, z3, t1, t2, t3 = symbols('z1 z2 z3 t1 t2 t3')
    a1, a2, a3, a4, a5, a6 = a
    s = a1 * z1 + a2 * z2 + a3 * z3
    expr = ((a1 - 64 * a1 * z1 + 4 * (-16 * a1 - 16 * a2 + 3 * a5) * z2 - 12 * a4 * z3) * t1 ** 2
            + (a2 - 12 * a5 * z1 - 64 * a2 * z2 + 4 * (-16 * a2 - 16 * a3 + 3 * a6) * z3) * t2 ** 2
            + (a3 + 4 * (-16 * a1 - 16 * a3 + 3 * a4) * z1 - 12 * a6 * z2 - 64 * a3 * z3) * t3 ** 2
            - 128 * s * (t1 * t2 + t2 * t3 + t3 * t1)
            - 64 * s * (t1 + t2 + t3)
            - 12 * s)
    return expr, (z1, z2, z3), (t1, t2, t3)


def d8_operator(a: Sequence) -> ThetaOperator:
    """
    D_a for a rational vector a of length 6.
    """
    if len(a) != 6:
        raise SeriesError(f"D8 operators take 6 parameters, got {len(a)}")
    expr, zs, ts = d8_expression([_sympy_rational(x) for x in a])
    return ThetaOperator.from_expr(expr, zs, ts, label=f"D_a a={list(a)}")


def _sympy_rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def d8_operators() -> List[ThetaOperator]:
    """
    D_a for the six standard basis vectors a.
    """
    return [d8_operator([int(i == j) for i in range(6)]) for j in range(6)]


class D8Family:
    def __init__(self, trunc: int):
        self.trunc = trunc
        self.operators = d8_operators()
        self.phi0 = solve_regular(self.operators, trunc)

    def symmetric(self) -> bool:
        return all(self.phi0.permute(p) == self.phi0 for p in permutations(range(3)))


# X1(6) elliptic family

def elliptic_operator() -> ThetaOperator:
    z, t = symbols('z t')
    return ThetaOperator.from_expr((8 * z - 1) * (z + 1) * t ** 2 + z * (16 * z + 7) * t + 2 * z * (4 * z + 1),
                                   [z], [t], label="X1(6)")


def franel(n: int) -> int:
    return sum(comb(n, k) ** 3 for k in range(n + 1))


ELLIPTIC_Z = {1: 9, 6: 3, 2: -9, 3: -3}
ELLIPTIC_PERIOD = {2: 6, 3: 1, 1: -3, 6: -2}
PRINTED_FRANEL = [1, 2, 10, 56, 346, 2252, 15184]
PRINTED_Z = [1, -3, 3, 5, -18, 15]
PRINTED_PERIOD = [1, 2, 4, 2, 2, 4]

_ELLIPTIC_ANCHOR = "Sec. B-model, X1(6) family"


def _coefficients(series: PuiseuxSeries, count: int, offset: Fraction = Fraction(0)) -> List[Fraction]:
    return [series.coefficient(offset + Fraction(k, 6)) for k in range(count)]


def _render(values: Sequence) -> str:
    return ", ".join(str(v) for v in values)


def elliptic_suite(trunc: int) -> List[Check]:
    """
    Check the X1(6) family through ``trunc`` steps of q^(1/6).
    """
    checks = []
    op = elliptic_operator()
    phi = solve_regular([op], trunc)
    got = [phi[(n,)] for n in range(trunc + 1)]
    printed = min(len(PRINTED_FRANEL), trunc + 1)
    checks.append(Check.compare("elliptic.franel.printed", f'{_ELLIPTIC_ANCHOR}, "1+2z+10z^2+56z^3+346z^4+2252z^5+15184z^6"',
                                _render(PRINTED_FRANEL[:printed]), _render(got[:printed])))
    checks.append(Check.compare("elliptic.franel.binomial", f'{_ELLIPTIC_ANCHOR}, "sum binom(n,k)^3 z^n"',
                                _render(franel(n) for n in range(trunc + 1)), _render(got)))
    checks.append(Check.compare("elliptic.annihilation", f"{_ELLIPTIC_ANCHOR}, Picard-Fuchs operator",
                                str(MultiSeries(1, trunc)), str(op.on_series(phi))))

    prec = Fraction(trunc + 1, 6)
    z = eta_quotient(ELLIPTIC_Z, prec)
    shown = min(len(PRINTED_Z), trunc)
    checks.append(Check.compare("elliptic.z-expansion", f'{_ELLIPTIC_ANCHOR}, "z(q) = q^(1/6)(1-3q^(1/6)+...)"',
                                _render(PRINTED_Z[:shown]), _render(_coefficients(z, shown, Fraction(1, 6)))))
    period = eta_quotient(ELLIPTIC_PERIOD, prec)
    shown = min(len(PRINTED_PERIOD), trunc + 1)
    checks.append(Check.compare("elliptic.period-expansion", f'{_ELLIPTIC_ANCHOR}, "1+2q^(1/6)+4q^(1/3)+..."',
                                _render(PRINTED_PERIOD[:shown]), _render(_coefficients(period, shown))))

    composed = substitute([phi[(n,)] for n in range(trunc + 1)], z)
    checks.append(Check.compare("elliptic.period-composition", f"{_ELLIPTIC_ANCHOR}, Phi0(z(q)) as eta quotient",
                                period.to_text(), composed.to_text() if composed == period else _mismatch(composed, period)))
    lattice_sum = hexagonal_lattice_sum(prec)
    checks.append(Check.compare("elliptic.lattice-sum", f"{_ELLIPTIC_ANCHOR}, theta series of the hexagonal lattice",
                                period.to_text(), lattice_sum.to_text() if lattice_sum == period else _mismatch(lattice_sum, period)))
    return checks


def _mismatch(got: PuiseuxSeries, expected: PuiseuxSeries) -> str:
    difference = got.first_difference(expected)
    assert difference is not None
    e, a, b = difference
    return f"coefficient of q^({e}) is {a}, expected {b}"
