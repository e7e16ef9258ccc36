"""
Cyclotomic Service

Exact arithmetic in cyclotomic fields Q(zeta_N). Elements are stored as an
integer numerator vector over the power basis 1, z, ..., z^(d-1) of
Q(zeta_N) (reduced modulo the N-th cyclotomic polynomial) together with a
positive common denominator. Every scalar of the category layer lives here.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import sympy
from cachetools import LRUCache, cached
from sympy import QQ, Poly, Rational, Symbol, cyclotomic_poly, factorint, legendre_symbol

from ..core.exceptions import InvalidInputError

_x = Symbol("x")

Number = Union[int, Fraction, "CycScalar"]


class CyclotomicBasis:
    """Power basis of Q(zeta_N) with a table of reduced powers of zeta_N"""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise InvalidInputError("conductor must be positive", {"N": conductor})
        self.conductor = conductor
        coeffs = [int(c) for c in reversed(Poly(cyclotomic_poly(conductor, _x), _x).all_coeffs())]
        self.degree = len(coeffs) - 1
        self.modulus = Poly(cyclotomic_poly(conductor, _x), _x, domain=QQ)
        # z^d = sum of tail terms
        self.tail = [(j, -c) for j, c in enumerate(coeffs[:-1]) if c]
        powers = []
        vector = [0] * self.degree
        vector[0] = 1
        for _ in range(conductor):
            powers.append(tuple(vector))
            vector = self._times_z(vector)
        self.powers = powers

    def _times_z(self, vector: List[int]) -> List[int]:
        top = vector[-1]
        shifted = [0] + vector[:-1]
        if top:
            for j, c in self.tail:
                shifted[j] += c * top
        return shifted

    def reduce(self, coeffs: List[int]) -> List[int]:
        """Reduce a coefficient list of any length modulo the cyclotomic polynomial"""
        d = self.degree
        work = list(coeffs)
        for e in range(len(work) - 1, d - 1, -1):
            top = work[e]
            if top:
                work[e] = 0
                for j, c in self.tail:
                    work[e - d + j] += c * top
        if len(work) < d:
            work.extend([0] * (d - len(work)))
        return work[:d]


@cached(cache=LRUCache(maxsize=64))
def get_basis(conductor: int) -> CyclotomicBasis:
    return CyclotomicBasis(conductor)


def _normalize(num: List[int], den: int) -> Tuple[Tuple[int, ...], int]:
    if den < 0:
        num, den = [-c for c in num], -den
    if not any(num):
        return tuple(0 for _ in num), 1
    g = math.gcd(den, *num)
    if g > 1:
        num, den = [c // g for c in num], den // g
    return tuple(num), den


class CycScalar:
    """Exact element of Q(zeta_N); immutable, compared exactly, unhashable"""

    __slots__ = ("_conductor", "_num", "_den")

    def __init__(self, conductor: int, num: Sequence[int], den: int = 1, _canonical: bool = False):
        if _canonical:
            self._conductor, self._num, self._den = conductor, tuple(num), den
            return
        if den == 0:
            raise InvalidInputError("zero denominator in cyclotomic scalar")
        basis = get_basis(conductor)
        reduced = basis.reduce(list(num)) if len(num) != basis.degree else list(num)
        self._conductor = conductor
        self._num, self._den = _normalize(reduced, den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, value: int) -> CycScalar:
        return cls(1, (value,), 1, _canonical=True)

    @classmethod
    def from_fraction(cls, value: Union[int, Fraction]) -> CycScalar:
        value = Fraction(value)
        return cls(1, (value.numerator,), value.denominator, _canonical=True)

    @classmethod
    def zero(cls) -> CycScalar:
        return cls.from_int(0)

    @classmethod
    def one(cls) -> CycScalar:
        return cls.from_int(1)

    @classmethod
    def root_of_unity(cls, conductor: int, exponent: int) -> CycScalar:
        if conductor < 1:
            raise InvalidInputError("conductor must be positive", {"N": conductor})
        basis = get_basis(conductor)
        return cls(conductor, basis.powers[exponent % conductor], 1, _canonical=True)

    @classmethod
    def from_terms(cls, conductor: int, terms: Iterable[Tuple[int, Union[int, Fraction]]]) -> CycScalar:
        """Build sum of c * zeta_N^e; terms may use any exponents"""
        basis = get_basis(conductor)
        terms = [(e, Fraction(c)) for e, c in terms]
        den = 1
        for _, c in terms:
            den = den * c.denominator // math.gcd(den, c.denominator)
        acc = [0] * basis.degree
        for e, c in terms:
            weight = c.numerator * (den // c.denominator)
            if weight:
                for j, v in enumerate(basis.powers[e % conductor]):
                    if v:
                        acc[j] += weight * v
        num, den = _normalize(acc, den)
        return cls(conductor, num, den, _canonical=True)

    # -- accessors ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def numerators(self) -> Tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def is_one(self) -> bool:
        return self._den == 1 and self._num[0] == 1 and self.is_rational()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInputError("scalar is not rational", {"value": str(self)})
        return Fraction(self._num[0], self._den)

    def as_int(self) -> int:
        value = self.as_fraction()
        if value.denominator != 1:
            raise InvalidInputError("scalar is not an integer", {"value": str(self)})
        return value.numerator

    def terms(self) -> List[Tuple[int, Fraction]]:
        """Canonical (exponent, coefficient) pairs sorted by exponent"""
        return [(e, Fraction(c, self._den)) for e, c in enumerate(self._num) if c]

    # -- conductor handling ------------------------------------------------

    def lift(self, conductor: int) -> CycScalar:
        """Same value expressed in Q(zeta_L) for a multiple L of the conductor"""
        if conductor == self._conductor:
            return self
        if conductor % self._conductor:
            raise InvalidInputError("target conductor is not a multiple", {"from": self._conductor, "to": conductor})
        basis = get_basis(conductor)
        step = conductor // self._conductor
        acc = [0] * basis.degree
        for e, c in enumerate(self._num):
            if c:
                for j, v in enumerate(basis.powers[(step * e) % conductor]):
                    if v:
                        acc[j] += c * v
        num, den = _normalize(acc, self._den)
        return CycScalar(conductor, num, den, _canonical=True)

    def to_conductor(self, conductor: int) -> CycScalar:
        """Restrict to Q(zeta_M); raises if the value does not lie in that subfield"""
        if self.is_rational():
            return CycScalar(conductor, [self._num[0]] + [0] * (get_basis(conductor).degree - 1), self._den)
        common = math.lcm(conductor, self._conductor)
        target = self.lift(common)
        small = get_basis(conductor)
        large = get_basis(common)
        step = common // conductor
        columns = [large.powers[(step * j) % common] for j in range(small.degree)]
        rows = [[Fraction(columns[j][i]) for j in range(small.degree)] + [Fraction(target._num[i], target._den)]
                for i in range(large.degree)]
        solution = _solve_rational(rows, small.degree)
        if solution is None:
            raise InvalidInputError("value does not lie in the requested subfield", {"N": conductor, "value": str(self)})
        return CycScalar.from_terms(conductor, list(enumerate(solution)))

    @staticmethod
    def _common(a: CycScalar, b: CycScalar) -> Tuple[CycScalar, CycScalar]:
        if a._conductor == b._conductor:
            return a, b
        n = math.lcm(a._conductor, b._conductor)
        return a.lift(n), b.lift(n)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional[CycScalar]:
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_fraction(other)
        return None

    def _scaled(self, p: int, q: int) -> CycScalar:
        if p == q:
            return self
        num, den = _normalize([c * p for c in self._num], self._den * q)
        return CycScalar(self._conductor, num, den, _canonical=True)

    def __add__(self, other: Number) -> CycScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.is_rational() or self.is_rational():
            base, rat = (self, other) if other.is_rational() else (other, self)
            p, q = rat._num[0], rat._den
            num = [c * q for c in base._num]
            num[0] += p * base._den
            num, den = _normalize(num, base._den * q)
            return CycScalar(base._conductor, num, den, _canonical=True)
        a, b = self._common(self, other)
        num, den = _normalize([x * b._den + y * a._den for x, y in zip(a._num, b._num)], a._den * b._den)
        return CycScalar(a._conductor, num, den, _canonical=True)

    def __radd__(self, other: Number) -> CycScalar:
        return self + other

    def __neg__(self) -> CycScalar:
        return CycScalar(self._conductor, tuple(-c for c in self._num), self._den, _canonical=True)

    def __sub__(self, other: Number) -> CycScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> CycScalar:
        return (-self) + other

    def __mul__(self, other: Number) -> CycScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CycScalar.zero()
        if other.is_rational():
            return self._scaled(other._num[0], other._den)
        if self.is_rational():
            return other._scaled(self._num[0], self._den)
        a, b = self._common(self, other)
        basis = get_basis(a._conductor)
        product = [0] * (2 * basis.degree - 1)
        right = [(j, y) for j, y in enumerate(b._num) if y]
        for i, x in enumerate(a._num):
            if x:
                for j, y in right:
                    product[i + j] += x * y
        num, den = _normalize(basis.reduce(product), a._den * b._den)
        return CycScalar(a._conductor, num, den, _canonical=True)

    def __rmul__(self, other: Number) -> CycScalar:
        return self * other

    def inv(self) -> CycScalar:
        if self.is_zero():
            raise InvalidInputError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycScalar.from_fraction(Fraction(self._den, self._num[0]))
        basis = get_basis(self._conductor)
        inverse = Poly.from_list(list(reversed(self._num)), _x, domain=QQ).invert(basis.modulus)
        terms = [(e, _fraction(c) * self._den) for e, c in enumerate(reversed(inverse.all_coeffs()))]
        return CycScalar.from_terms(self._conductor, terms)

    def __truediv__(self, other: Number) -> CycScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other: Number) -> CycScalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int) -> CycScalar:
        if exponent < 0:
            return self.inv() ** -exponent
        result = CycScalar.one()
        base = self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> CycScalar:
        """Complex conjugate: zeta_N -> zeta_N^(-1)"""
        if self.is_rational():
            return self
        basis = get_basis(self._conductor)
        n = self._conductor
        acc = [0] * basis.degree
        for e, c in enumerate(self._num):
            if c:
                for j, v in enumerate(basis.powers[(-e) % n]):
                    if v:
                        acc[j] += c * v
        num, den = _normalize(acc, self._den)
        return CycScalar(n, num, den, _canonical=True)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational() and other.is_rational():
            return self._num[0] == other._num[0] and self._den == other._den
        if self._conductor == other._conductor:
            return self._num == other._num and self._den == other._den
        return (self - other).is_zero()

    __hash__ = None

    def to_complex(self) -> complex:
        """Numerical embedding zeta_N -> exp(2 pi i / N); display only"""
        total = 0j
        for e, c in enumerate(self._num):
            if c:
                total += c * cmath.exp(2j * math.pi * e / self._conductor)
        return total / self._den

    def __repr__(self) -> str:
        return f"CycScalar({self._conductor}, {str(self)})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(Fraction(self._num[0], self._den))
        parts = [f"{c}*z^{e}" if e else str(c) for e, c in self.terms()]
        return " + ".join(parts)


def _solve_rational(rows: List[List[Fraction]], width: int) -> Optional[List[Fraction]]:
    """Solve an augmented rational system; None if inconsistent, free variables set to 0"""
    reduced, pivots = sympy.Matrix([[_rational(v) for v in row] for row in rows]).rref()
    if width in pivots:
        return None
    solution = [Fraction(0)] * width
    for i, col in enumerate(pivots):
        solution[col] = _fraction(reduced[i, width])
    return solution


ZERO = CycScalar.zero()
ONE = CycScalar.one()


@cached(cache=LRUCache(maxsize=64))
def _generators(count: int) -> Tuple[Symbol, ...]:
    return (_x,) + tuple(Symbol(f"m{i}") for i in range(count))


@cached(cache=LRUCache(maxsize=256))
def _modulus(conductor: int, count: int) -> Poly:
    return Poly(cyclotomic_poly(conductor, _x), *_generators(count), domain=QQ)


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


class CycPoly:
    """Polynomial in unknowns m0, m1, ... over Q(zeta_N).

    Backed by a sympy Poly over QQ whose first generator stands for zeta_N;
    every result is reduced modulo the N-th cyclotomic polynomial.
    """

    __slots__ = ("conductor", "poly")

    def __init__(self, conductor: int, poly: Poly):
        self.conductor = conductor
        self.poly = poly

    @property
    def count(self) -> int:
        return len(self.poly.gens) - 1

    @classmethod
    def _build(cls, conductor: int, count: int, terms: Dict[Tuple[int, ...], Rational]) -> CycPoly:
        poly = Poly.from_dict(terms, *_generators(count), domain=QQ) if terms \
            else Poly(0, *_generators(count), domain=QQ)
        return cls(conductor, poly.rem(_modulus(conductor, count)))

    @classmethod
    def constant(cls, value: CycScalar, count: int) -> CycPoly:
        zeros = (0,) * count
        terms = {(e,) + zeros: _rational(c) for e, c in value.terms()}
        return cls._build(value.conductor, count, terms)

    @classmethod
    def variable(cls, index: int, count: int) -> CycPoly:
        mono = [0] * (count + 1)
        mono[index + 1] = 1
        return cls._build(1, count, {tuple(mono): Rational(1)})

    def lift(self, conductor: int) -> CycPoly:
        """Same polynomial with coefficients in Q(zeta_L) for a multiple L of the conductor"""
        if conductor == self.conductor:
            return self
        step = conductor // self.conductor
        terms = {(mono[0] * step,) + mono[1:]: coeff for mono, coeff in self.poly.as_dict().items()}
        return self._build(conductor, self.count, terms)

    def _align(self, other: CycPoly) -> Tuple[CycPoly, CycPoly]:
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    def _coerce(self, other) -> CycPoly:
        if isinstance(other, CycPoly):
            return other
        if isinstance(other, (int, Fraction)):
            other = CycScalar.from_fraction(other)
        return CycPoly.constant(other, self.count)

    def __add__(self, other) -> CycPoly:
        a, b = self._align(self._coerce(other))
        return CycPoly(a.conductor, a.poly + b.poly)

    def __sub__(self, other) -> CycPoly:
        a, b = self._align(self._coerce(other))
        return CycPoly(a.conductor, a.poly - b.poly)

    def __neg__(self) -> CycPoly:
        return CycPoly(self.conductor, -self.poly)

    def __mul__(self, other) -> CycPoly:
        a, b = self._align(self._coerce(other))
        return CycPoly(a.conductor, (a.poly * b.poly).rem(_modulus(a.conductor, a.count)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycPoly:
        result = CycPoly.constant(ONE, self.count)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def _groups(self, index: Optional[int] = None) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], Rational]]:
        """Terms grouped by their exponents in the unknowns (or in one unknown)"""
        groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Rational]] = {}
        for mono, coeff in self.poly.as_dict().items():
            if index is None:
                key, rest = mono[1:], (mono[0],) + (0,) * self.count
            else:
                key = (mono[index + 1],)
                rest = mono[:index + 1] + (0,) + mono[index + 2:]
            groups.setdefault(key, {})[rest] = coeff
        return groups

    def monomials(self) -> Dict[Tuple[int, ...], CycScalar]:
        """Coefficient of every monomial in the unknowns"""
        return {key: CycScalar.from_terms(self.conductor, [(rest[0], _fraction(c)) for rest, c in terms.items()])
                for key, terms in self._groups().items()}

    def __len__(self) -> int:
        return len(self._groups())

    def variables(self) -> Set[int]:
        return {i for mono in self.poly.monoms() for i, k in enumerate(mono[1:]) if k}

    def is_constant(self) -> bool:
        return not self.variables()

    def value(self) -> CycScalar:
        """The constant term"""
        zeros = (0,) * self.count
        return self.monomials().get(zeros, ZERO)

    def univariate(self, index: int) -> Dict[int, CycScalar]:
        """Coefficients by degree, for a polynomial in the single unknown index"""
        return {key[index]: value for key, value in self.monomials().items()}

    def substitute(self, index: int, value: CycPoly) -> CycPoly:
        """Replace the unknown index by a polynomial"""
        a, v = self._align(value)
        result = CycPoly(a.conductor, Poly(0, *a.poly.gens, domain=QQ))
        for (k,), terms in a._groups(index).items():
            part = CycPoly(a.conductor, Poly.from_dict(terms, *a.poly.gens, domain=QQ))
            result = result + part * v ** k
        return result

    def divide_out(self, index: int) -> CycPoly:
        """Strip every power of the unknown index that divides all terms"""
        terms = self.poly.as_dict()
        low = min(mono[index + 1] for mono in terms) if terms else 0
        if not low:
            return self
        shifted = {mono[:index + 1] + (mono[index + 1] - low,) + mono[index + 2:]: c for mono, c in terms.items()}
        return CycPoly(self.conductor, Poly.from_dict(shifted, *self.poly.gens, domain=QQ))

    def __repr__(self) -> str:
        return f"CycPoly({self.conductor}, {self.poly.as_expr()})"


def root_of_unity(conductor: int, exponent: int) -> CycScalar:
    return CycScalar.root_of_unity(conductor, exponent)


def to_float(value: CycScalar) -> complex:
    return value.to_complex()


@cached(cache=LRUCache(maxsize=64))
def _sqrt_prime(p: int) -> CycScalar:
    """sqrt(p) in Q(zeta_8) for p = 2, else from the quadratic Gauss sum in Q(zeta_4p)"""
    if p == 2:
        return CycScalar.root_of_unity(8, 1) + CycScalar.root_of_unity(8, 7)
    gauss = CycScalar.from_terms(p, [(a, legendre_symbol(a, p)) for a in range(1, p)])
    return gauss if p % 4 == 1 else gauss * CycScalar.root_of_unity(4, 3)


Matrix = List[List[CycScalar]]


class CyclotomicService:
    """Exact linear algebra and encoding over cyclotomic scalars"""

    @staticmethod
    def root_of_unity(conductor: int, exponent: int) -> CycScalar:
        return CycScalar.root_of_unity(conductor, exponent)

    @staticmethod
    def encode(value: CycScalar) -> dict:
        """JSON form {"N": ..., "terms": [[e, "p/q"], ...]}"""
        return {
            "N": value.conductor,
            "terms": [[e, f"{c.numerator}/{c.denominator}"] for e, c in value.terms()],
        }

    @staticmethod
    def decode(payload: dict) -> CycScalar:
        try:
            terms = [(int(e), Fraction(c)) for e, c in payload["terms"]]
            return CycScalar.from_terms(int(payload["N"]), terms)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"malformed cyclotomic scalar: {e}", {"payload": payload})

    @staticmethod
    def rref(rows: Matrix) -> Tuple[Matrix, List[int]]:
        """Reduced row echelon form and pivot columns"""
        rows = [list(r) for r in rows]
        if not rows:
            return rows, []
        width = len(rows[0])
        pivots = []
        r = 0
        for col in range(width):
            pivot = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            lead = rows[r][col].inv()
            rows[r] = [v * lead for v in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][col].is_zero():
                    factor = rows[i][col]
                    rows[i] = [a - factor * b if not b.is_zero() else a for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return rows[:r], pivots

    def rank(self, rows: Matrix) -> int:
        return len(self.rref(rows)[1])

    @staticmethod
    def determinant(matrix: Matrix) -> CycScalar:
        rows = [list(r) for r in matrix]
        n = len(rows)
        det = ONE
        for col in range(n):
            pivot = next((i for i in range(col, n) if not rows[i][col].is_zero()), None)
            if pivot is None:
                return ZERO
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            lead = rows[col][col]
            det = det * lead
            inv = lead.inv()
            for i in range(col + 1, n):
                if not rows[i][col].is_zero():
                    factor = rows[i][col] * inv
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
        return det

    def solve(self, rows: Matrix, rhs: List[CycScalar]) -> Optional[List[CycScalar]]:
        """One solution of rows * x = rhs (free variables zero), or None"""
        width = len(rows[0]) if rows else 0
        reduced, pivots = self.rref([list(r) + [b] for r, b in zip(rows, rhs)])
        if width in pivots:
            return None
        solution = [ZERO] * width
        for row, col in zip(reduced, pivots):
            solution[col] = row[width]
        return solution

    def nullspace(self, rows: Matrix, width: int) -> Matrix:
        """Basis of the kernel, one vector per free column"""
        if not rows:
            return [[ONE if i == j else ZERO for i in range(width)] for j in range(width)]
        reduced, pivots = self.rref(rows)
        basis = []
        for free in (c for c in range(width) if c not in pivots):
            vector = [ZERO] * width
            vector[free] = ONE
            for row, col in zip(reduced, pivots):
                vector[col] = -row[free]
            basis.append(vector)
        return basis

    @staticmethod
    def sqrt_rational(value: Union[int, Fraction]) -> CycScalar:
        """Square root of a rational: a rational times Gauss sums for the square-free part"""
        value = Fraction(value)
        if value == 0:
            return ZERO
        result = ONE
        if value < 0:
            value, result = -value, CycScalar.root_of_unity(4, 1)
        root, free = 1, []
        for p, k in factorint(value.numerator * value.denominator).items():
            root *= p ** (k // 2)
            if k % 2:
                free.append(p)
        result = result * CycScalar.from_fraction(Fraction(root, value.denominator))
        for p in free:
            result = result * _sqrt_prime(p)
        return result

    def sqrt_exact(self, value: CycScalar) -> Optional[CycScalar]:
        """Exact square root when value is a rational times a root of unity"""
        if value.is_zero():
            return ZERO
        n = value.conductor
        for e in range(n):
            candidate = value * CycScalar.root_of_unity(n, -e)
            if candidate.is_rational():
                return self.sqrt_rational(candidate.as_fraction()) * CycScalar.root_of_unity(2 * n, e)
        return None


cyclotomic_service = CyclotomicService()
