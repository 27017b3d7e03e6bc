"""
Truncated power series with exact rational coefficients.

``MultiSeries`` is a power series in several variables truncated by total
degree. ``PuiseuxSeries`` is a series in one variable with fractional
exponents k/d over a common denominator d, used for theta functions and
eta quotients.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union
from typek.errors import SeriesError
from typek.utils import get_logger

logger = get_logger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def monomials(nvars: int, degree: int) -> Iterator[Exponent]:
    """
    Exponent tuples of the given total degree, z1^degree first.
    """
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            yield (first,) + rest


def _poly_mul(a: Dict[Exponent, Fraction], b: Dict[Exponent, Fraction], limit: int) -> Dict[Exponent, Fraction]:
    result: Dict[Exponent, Fraction] = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > limit:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            result[e] = result.get(e, 0) + ca * cb
    return {e: c for e, c in result.items() if c}


def _is_square(value: Fraction) -> bool:
    if value < 0:
        return False
    return isqrt(value.numerator) ** 2 == value.numerator and isqrt(value.denominator) ** 2 == value.denominator


class MultiSeries:
    """
    Power series in ``nvars`` variables, exact through total degree ``trunc``.

    Arithmetic between two series is exact through the smaller truncation.
    """

    def __init__(self, nvars: int, trunc: int, coeffs: Optional[Dict[Exponent, Scalar]] = None):
        if trunc < 0:
            raise SeriesError(f"negative truncation {trunc}")
        self.nvars = nvars
        self.trunc = trunc
        self.coeffs: Dict[Exponent, Fraction] = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise SeriesError(f"exponent {e} does not have {nvars} entries")
            if c and sum(e) <= trunc:
                self.coeffs[e] = Fraction(c)

    @classmethod
    def constant(cls, value: Scalar, nvars: int, trunc: int) -> 'MultiSeries':
        return cls(nvars, trunc, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int, trunc: int) -> 'MultiSeries':
        return cls.constant(1, nvars, trunc)

    @classmethod
    def variable(cls, index: int, nvars: int, trunc: int) -> 'MultiSeries':
        e = tuple(int(i == index) for i in range(nvars))
        return cls(nvars, trunc, {e: 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], index: int = 0, nvars: int = 1,
                        trunc: Optional[int] = None) -> 'MultiSeries':
        if trunc is None:
            trunc = len(coeffs) - 1
        terms = {}
        for k, c in enumerate(coeffs[:trunc + 1]):
            terms[tuple(k if i == index else 0 for i in range(nvars))] = c
        return cls(nvars, trunc, terms)

    def __getitem__(self, exponent: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(exponent), Fraction(0))

    coefficient = __getitem__

    @property
    def constant_term(self) -> Fraction:
        return self[(0,) * self.nvars]

    def degree_parts(self) -> List[Dict[Exponent, Fraction]]:
        parts: List[Dict[Exponent, Fraction]] = [{} for _ in range(self.trunc + 1)]
        for e, c in self.coeffs.items():
            parts[sum(e)][e] = c
        return parts

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> 'MultiSeries':
        if isinstance(other, MultiSeries):
            if other.nvars != self.nvars:
                raise SeriesError(f"cannot combine series in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiSeries.constant(other, self.nvars, self.trunc)
        return NotImplemented

    def truncate(self, trunc: int) -> 'MultiSeries':
        if trunc > self.trunc:
            raise SeriesError(f"cannot raise the truncation from {self.trunc} to {trunc}")
        return MultiSeries(self.nvars, trunc, self.coeffs)

    def __add__(self, other) -> 'MultiSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self.coeffs)
        for e, c in other.coeffs.items():
            result[e] = result.get(e, 0) + c
        return MultiSeries(self.nvars, min(self.trunc, other.trunc), result)

    __radd__ = __add__

    def __neg__(self) -> 'MultiSeries':
        return MultiSeries(self.nvars, self.trunc, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> 'MultiSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'MultiSeries':
        return (-self) + other

    def __mul__(self, other) -> 'MultiSeries':
        if isinstance(other, (int, Fraction)):
            return MultiSeries(self.nvars, self.trunc, {e: c * other for e, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        trunc = min(self.trunc, other.trunc)
        return MultiSeries(self.nvars, trunc, _poly_mul(self.coeffs, other.coeffs, trunc))

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'MultiSeries':
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int) -> 'MultiSeries':
        if k < 0:
            return self.inverse() ** (-k)
        result = MultiSeries.one(self.nvars, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        """
        Series are equal when they agree through the smaller truncation.
        """
        if not isinstance(other, MultiSeries) or other.nvars != self.nvars:
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore

    def first_difference(self, other: 'MultiSeries', upto: Optional[int] = None) -> Optional[Tuple[Exponent, Fraction, Fraction]]:
        """
        returns:
            the lowest monomial where the series differ with both coefficients, or None
        """
        limit = min(self.trunc, other.trunc)
        if upto is not None:
            limit = min(limit, upto)
        keys = {e for e in list(self.coeffs) + list(other.coeffs) if sum(e) <= limit}
        for e in sorted(keys, key=lambda e: (sum(e), tuple(-x for x in e))):
            if self[e] != other[e]:
                return e, self[e], other[e]
        return None

    def inverse(self) -> 'MultiSeries':
        """
        Multiplicative inverse of a series with nonzero constant term.
        """
        c = self.constant_term
        if c == 0:
            raise SeriesError("cannot invert a series without constant term")
        parts = self.degree_parts()
        result: List[Dict[Exponent, Fraction]] = [{(0,) * self.nvars: 1 / c}]
        for n in range(1, self.trunc + 1):
            total: Dict[Exponent, Fraction] = {}
            for k in range(1, n + 1):
                for e, v in _poly_mul(parts[k], result[n - k], n).items():
                    total[e] = total.get(e, 0) + v
            result.append({e: -v / c for e, v in total.items() if v})
        return MultiSeries(self.nvars, self.trunc, {e: v for part in result for e, v in part.items()})

    invert_unit = inverse

    def exp(self) -> 'MultiSeries':
        """
        exp of a series without constant term, graded by total degree:
        n g_n = sum_k k f_k g_(n-k).
        """
        if self.constant_term != 0:
            raise SeriesError("exp needs a series without constant term")
        parts = self.degree_parts()
        result: List[Dict[Exponent, Fraction]] = [{(0,) * self.nvars: Fraction(1)}]
        for n in range(1, self.trunc + 1):
            total: Dict[Exponent, Fraction] = {}
            for k in range(1, n + 1):
                if not parts[k]:
                    continue
                for e, v in _poly_mul(parts[k], result[n - k], n).items():
                    total[e] = total.get(e, 0) + k * v
            result.append({e: v / n for e, v in total.items() if v})
        return MultiSeries(self.nvars, self.trunc, {e: v for part in result for e, v in part.items()})

    def log(self) -> 'MultiSeries':
        """
        log of a series with constant term 1:
        n L_n = n f_n - sum_(k<n) k L_k f_(n-k).
        """
        if self.constant_term != 1:
            raise SeriesError("log needs constant term 1")
        parts = self.degree_parts()
        result: List[Dict[Exponent, Fraction]] = [{}]
        for n in range(1, self.trunc + 1):
            total: Dict[Exponent, Fraction] = {e: n * v for e, v in parts[n].items()}
            for k in range(1, n):
                for e, v in _poly_mul(result[k], parts[n - k], n).items():
                    total[e] = total.get(e, 0) - k * v
            result.append({e: v / n for e, v in total.items() if v})
        return MultiSeries(self.nvars, self.trunc, {e: v for part in result for e, v in part.items()})

    def sqrt(self) -> 'MultiSeries':
        c = self.constant_term
        if c == 0 or not _is_square(c):
            raise SeriesError(f"constant term {c} is not a nonzero rational square")
        root = Fraction(isqrt(c.numerator), isqrt(c.denominator))
        return ((self / c).log() * Fraction(1, 2)).exp() * root

    def compose(self, substitutions: Sequence['MultiSeries']) -> 'MultiSeries':
        """
        Substitute series without constant term for the variables.
        """
        if len(substitutions) != self.nvars:
            raise SeriesError(f"need {self.nvars} substitutions, got {len(substitutions)}")
        target = substitutions[0].nvars
        for s in substitutions:
            if s.nvars != target:
                raise SeriesError("substitutions live in different rings")
            if s.constant_term != 0:
                raise SeriesError("substituted series must not have a constant term")
        trunc = min([self.trunc] + [s.trunc for s in substitutions])
        subs = [s.truncate(trunc) for s in substitutions]

        powers: Dict[Exponent, MultiSeries] = {(0,) * self.nvars: MultiSeries.one(target, trunc)}

        def power(e: Exponent) -> MultiSeries:
            if e not in powers:
                j = next(i for i, x in enumerate(e) if x)
                lower = tuple(x - int(i == j) for i, x in enumerate(e))
                powers[e] = power(lower) * subs[j]
            return powers[e]

        result = MultiSeries(target, trunc)
        for e in sorted(self.coeffs, key=sum):
            if sum(e) <= trunc:
                result = result + power(e) * self.coeffs[e]
        return result

    def derivative(self, index: int) -> 'MultiSeries':
        result = {}
        for e, c in self.coeffs.items():
            if e[index]:
                result[tuple(x - int(i == index) for i, x in enumerate(e))] = c * e[index]
        return MultiSeries(self.nvars, max(self.trunc - 1, 0), result)

    def euler(self, index: int) -> 'MultiSeries':
        """
        z_i d/dz_i
        """
        return MultiSeries(self.nvars, self.trunc, {e: c * e[index] for e, c in self.coeffs.items()})

    def multiply_monomial(self, exponent: Sequence[int]) -> 'MultiSeries':
        shift = tuple(exponent)
        return MultiSeries(self.nvars, self.trunc + sum(shift),
                           {tuple(x + y for x, y in zip(e, shift)): c for e, c in self.coeffs.items()})

    def divide_variable(self, index: int) -> 'MultiSeries':
        """
        Divide by z_i; every monomial must contain z_i.
        """
        if any(e[index] == 0 for e in self.coeffs):
            raise SeriesError(f"series is not divisible by variable {index + 1}")
        return MultiSeries(self.nvars, max(self.trunc - 1, 0),
                           {tuple(x - int(i == index) for i, x in enumerate(e)): c for e, c in self.coeffs.items()})

    def permute(self, order: Sequence[int]) -> 'MultiSeries':
        """
        New variable i is old variable order[i].
        """
        return MultiSeries(self.nvars, self.trunc,
                           {tuple(e[order[i]] for i in range(self.nvars)): c for e, c in self.coeffs.items()})

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = ["z"] if self.nvars == 1 else [f"z{i + 1}" for i in range(self.nvars)]
        terms = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.coeffs[e]
            factors = [n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x]
            if not factors:
                terms.append(str(c))
            elif c == 1:
                terms.append("*".join(factors))
            elif c == -1:
                terms.append("-" + "*".join(factors))
            else:
                terms.append("*".join([str(c)] + factors))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(deg {self.trunc + 1})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<MultiSeries nvars={self.nvars} trunc={self.trunc} terms={len(self.coeffs)}>"


def revert_map(units: Sequence[MultiSeries]) -> List[MultiSeries]:
    """
    Invert q_i = z_i u_i(z) for units u_i with constant term 1.

    Iterates z_i = q_i / u_i(z); each round fixes one more degree.

    returns:
        z_i(q), exact through degree T + 1 for units exact through T
    """
    v = len(units)
    for u in units:
        if u.nvars != v:
            raise SeriesError("revert_map needs one unit per variable")
        if u.constant_term != 1:
            raise SeriesError(f"unit has constant term {u.constant_term}, expected 1")
    trunc = min(u.trunc for u in units)
    shifts = [tuple(int(i == j) for i in range(v)) for j in range(v)]
    factors = [MultiSeries.one(v, trunc) for _ in range(v)]
    for round_ in range(trunc + 1):
        z = [a.multiply_monomial(s) for a, s in zip(factors, shifts)]
        updated = [u.compose(z).inverse() for u in units]
        if all(new.first_difference(old) is None for new, old in zip(updated, factors)):
            logger.debug(f"revert_map converged after {round_ + 1} rounds")
            factors = updated
            break
        factors = updated
    return [a.multiply_monomial(s) for a, s in zip(factors, shifts)]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class PuiseuxSeries:
    """
    Series sum c_k q^(k/d), exact for exponents below ``prec``.
    """

    def __init__(self, denominator: int, coeffs: Dict[int, Scalar], prec: Scalar):
        prec = Fraction(prec)
        kept = {k: Fraction(c) for k, c in coeffs.items() if c and Fraction(k, denominator) < prec}
        common = reduce(gcd, kept.keys(), denominator)
        self.denominator = denominator // common
        self.coeffs: Dict[int, Fraction] = {k // common: c for k, c in kept.items()}
        self.prec = prec

    @classmethod
    def from_terms(cls, terms: Dict[Fraction, Scalar], prec: Scalar) -> 'PuiseuxSeries':
        denominator = reduce(_lcm, (Fraction(e).denominator for e in terms), 1)
        return cls(denominator, {int(Fraction(e) * denominator): c for e, c in terms.items()}, prec)

    def terms(self) -> List[Tuple[Fraction, Fraction]]:
        return [(Fraction(k, self.denominator), self.coeffs[k]) for k in sorted(self.coeffs)]

    def coefficient(self, exponent: Scalar) -> Fraction:
        exponent = Fraction(exponent)
        if exponent >= self.prec:
            raise SeriesError(f"exponent {exponent} is beyond the precision {self.prec}")
        k = exponent * self.denominator
        if k.denominator != 1:
            return Fraction(0)
        return self.coeffs.get(int(k), Fraction(0))

    def valuation(self) -> Fraction:
        if not self.coeffs:
            return self.prec
        return Fraction(min(self.coeffs), self.denominator)

    def _rebased(self, denominator: int) -> Dict[int, Fraction]:
        factor = denominator // self.denominator
        return {k * factor: c for k, c in self.coeffs.items()}

    def _coerce(self, other) -> 'PuiseuxSeries':
        if isinstance(other, PuiseuxSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxSeries(1, {0: other}, self.prec)
        return NotImplemented

    def __add__(self, other) -> 'PuiseuxSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = _lcm(self.denominator, other.denominator)
        result = self._rebased(d)
        for k, c in other._rebased(d).items():
            result[k] = result.get(k, 0) + c
        return PuiseuxSeries(d, result, min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self) -> 'PuiseuxSeries':
        return PuiseuxSeries(self.denominator, {k: -c for k, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other) -> 'PuiseuxSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'PuiseuxSeries':
        return (-self) + other

    def __mul__(self, other) -> 'PuiseuxSeries':
        if isinstance(other, (int, Fraction)):
            return PuiseuxSeries(self.denominator, {k: c * other for k, c in self.coeffs.items()}, self.prec)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec + other.valuation(), other.prec + self.valuation())
        d = _lcm(self.denominator, other.denominator)
        limit = prec * d
        a, b = self._rebased(d), other._rebased(d)
        result: Dict[int, Fraction] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                if ka + kb < limit:
                    result[ka + kb] = result.get(ka + kb, 0) + ca * cb
        return PuiseuxSeries(d, result, prec)

    __rmul__ = __mul__

    def inverse(self) -> 'PuiseuxSeries':
        """
        Inverse of a series with nonzero constant term.
        """
        c = self.coeffs.get(0)
        if not c or self.valuation() != 0:
            raise SeriesError("only series with nonzero constant term can be inverted")
        d = self.denominator
        steps = int(self.prec * d)
        if Fraction(steps, d) == self.prec:
            steps -= 1
        result: Dict[int, Fraction] = {0: 1 / c}
        for n in range(1, steps + 1):
            total = sum((self.coeffs[k] * result.get(n - k, 0) for k in self.coeffs if 0 < k <= n), Fraction(0))
            if total:
                result[n] = -total / c
        return PuiseuxSeries(d, result, self.prec)

    invert_unit = inverse

    def __pow__(self, k: int) -> 'PuiseuxSeries':
        if k < 0:
            return self.inverse() ** (-k)
        result = PuiseuxSeries(1, {0: 1}, self.prec + k * self.valuation())
        for _ in range(k):
            result = result * self
        return result

    def shift(self, exponent: Scalar) -> 'PuiseuxSeries':
        """
        Multiply by q^exponent.
        """
        exponent = Fraction(exponent)
        d = _lcm(self.denominator, exponent.denominator)
        offset = int(exponent * d)
        return PuiseuxSeries(d, {k + offset: c for k, c in self._rebased(d).items()}, self.prec + exponent)

    def __eq__(self, other) -> bool:
        """
        Equal when all terms below the smaller precision agree.
        """
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None  # type: ignore

    def first_difference(self, other: 'PuiseuxSeries') -> Optional[Tuple[Fraction, Fraction, Fraction]]:
        prec = min(self.prec, other.prec)
        exponents = {e for e, _ in self.terms() + other.terms() if e < prec}
        for e in sorted(exponents):
            if self.coefficient(e) != other.coefficient(e):
                return e, self.coefficient(e), other.coefficient(e)
        return None

    def to_multi(self, index: int = 0, nvars: int = 1) -> MultiSeries:
        """
        The series as a power series in variable ``index``; exponents must be integral.
        """
        if self.denominator != 1 or any(k < 0 for k in self.coeffs):
            raise SeriesError("only power series with integral exponents convert")
        trunc = -((-self.prec.numerator) // self.prec.denominator) - 1
        terms = {tuple(k if i == index else 0 for i in range(nvars)): c for k, c in self.coeffs.items()}
        return MultiSeries(nvars, trunc, terms)

    def to_text(self, name: str = "q") -> str:
        parts = []
        for e, c in self.terms():
            if e == 0:
                monomial = ""
            elif e == 1:
                monomial = name
            else:
                monomial = f"{name}^({e})" if e.denominator != 1 else f"{name}^{e}"
            if not monomial:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            elif c == -1:
                parts.append("-" + monomial)
            else:
                parts.append(f"{c}*{monomial}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({name}^({self.prec}))"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<PuiseuxSeries d={self.denominator} prec={self.prec} terms={len(self.coeffs)}>"


def substitute(coeffs: Sequence[Scalar], z: PuiseuxSeries) -> PuiseuxSeries:
    """
    sum_n coeffs[n] z^n for z of positive valuation.
    """
    v = z.valuation()
    if v <= 0 or not z.coeffs:
        raise SeriesError("substitution needs a series of positive valuation")
    prec = min(z.prec, len(coeffs) * v)
    result = PuiseuxSeries(1, {0: coeffs[0]} if coeffs else {}, prec)
    power = PuiseuxSeries(1, {0: 1}, prec)
    for n in range(1, len(coeffs)):
        if n * v >= prec:
            break
        power = power * z
        if coeffs[n]:
            result = result + power * Fraction(coeffs[n])
    return PuiseuxSeries(result.denominator, result.coeffs, prec)


def _upto(value: Scalar, denominator: int) -> Fraction:
    """
    precision covering every exponent <= value on the 1/denominator grid
    """
    return Fraction(value) + Fraction(1, denominator)


def theta(k: int, T: Scalar) -> PuiseuxSeries:
    """
    Jacobi theta function q-expansion with every exponent <= T.

    theta2 = sum q^((n+1/2)^2/2), theta3 = sum q^(n^2/2), theta4 = sum (-1)^n q^(n^2/2).
    """
    T = Fraction(T)
    if T < 0:
        raise SeriesError("T must be non-negative")
    coeffs: Dict[int, Fraction] = {}
    if k == 2:
        m = 1
        while Fraction(m * m, 8) <= T:
            coeffs[m * m] = Fraction(2)
            m += 2
        return PuiseuxSeries(8, coeffs, _upto(T, 8))
    elif k in (3, 4):
        coeffs[0] = Fraction(1)
        n = 1
        while Fraction(n * n, 2) <= T:
            coeffs[n * n] = Fraction(2 if k == 3 or n % 2 == 0 else -2)
            n += 1
        return PuiseuxSeries(2, coeffs, _upto(T, 2))
    raise SeriesError(f"no theta function {k}, expected 2, 3 or 4")


def euler_product(length: int) -> List[int]:
    """
    Coefficients of prod_(n>=1) (1 - x^n) below x^length.
    """
    coeffs = [0] * length
    if length:
        coeffs[0] = 1
    for n in range(1, length):
        for i in range(length - 1, n - 1, -1):
            coeffs[i] -= coeffs[i - n]
    return coeffs


def _product_part(k: int, prec: Fraction) -> PuiseuxSeries:
    """
    prod_(n>=1) (1 - q^(n/k)) for exponents below prec.
    """
    length = max(int(prec * k) + 1, 1)
    coeffs = euler_product(length)
    return PuiseuxSeries(k, {i: c for i, c in enumerate(coeffs)}, prec)


def eta(T: Scalar) -> PuiseuxSeries:
    """
    Dedekind eta q^(1/24) prod (1 - q^n) with every exponent <= T.
    """
    prec = _upto(T, 24)
    return _product_part(1, prec - Fraction(1, 24)).shift(Fraction(1, 24))


def eta_quotient(exponents: Dict[int, int], prec: Scalar) -> PuiseuxSeries:
    """
    prod_k eta(t/k)^(e_k), where eta(t/k) = q^(1/(24k)) prod (1 - q^(n/k)).

    args:
        exponents: map k -> e_k
        prec: exponents below this bound are exact
    """
    prec = Fraction(prec)
    leading = sum((Fraction(e, 24 * k) for k, e in exponents.items()), Fraction(0))
    inner = prec - leading
    if inner <= 0:
        raise SeriesError(f"precision {prec} is below the leading exponent {leading}")
    result = PuiseuxSeries(1, {0: 1}, inner)
    for k, e in sorted(exponents.items()):
        result = result * (_product_part(k, inner) ** e)
    return result.shift(leading)


def hexagonal_lattice_sum(prec: Scalar) -> PuiseuxSeries:
    """
    1/3 sum over (n, m) in Z^2 of q^(Q/6) + 2 q^(Q/3) with Q = n^2 + nm + m^2.
    """
    prec = Fraction(prec)
    bound = isqrt(int(12 * prec) + 12) + 1
    coeffs: Dict[int, Fraction] = {}
    for n in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            Q = n * n + n * m + m * m
            for k, weight in ((Q, 1), (2 * Q, 2)):
                if Fraction(k, 6) < prec:
                    coeffs[k] = coeffs.get(k, 0) + Fraction(weight, 3)
    return PuiseuxSeries(6, coeffs, prec)
