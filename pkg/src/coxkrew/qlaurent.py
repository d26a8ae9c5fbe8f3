"""Exact integer Laurent polynomials in one variable ``q`` and the q-analogs built on them.

Everything here lives in the ring Z[q, q^-1].  Values are immutable; division is
only ever exact division, and a nonzero remainder raises :class:`NotDivisible`
instead of falling back to rational functions.
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "IntLaurentPoly",
    "QRational",
    "NotDivisible",
    "NonConstant",
    "Q",
    "ONE",
    "ZERO",
    "monomial",
    "q_number",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "cyclotomic",
    "specialize_at_root",
    "eval_at_one",
    "normalize",
    "parse_poly",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division in Z[q, q^-1] leaves a nonzero remainder."""


class IntLaurentPoly:
    """Laurent polynomial with arbitrary-precision integer coefficients.

    Stored sparsely as ``{exponent: coefficient}`` with no zero coefficients, so
    equality is plain dict equality and the zero polynomial is ``{}``.

    >>> p = IntLaurentPoly({0: 1, 1: 1})
    >>> str(p * p)
    '1 + 2*q + q^2'
    >>> str(IntLaurentPoly({-2: 1, 2: 1}))
    'q^-2 + q^2'
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "IntLaurentPoly":
        # c must already be canonical
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], shift: int = 0) -> "IntLaurentPoly":
        """Build ``sum coeffs[i] q^(i + shift)``."""
        return cls._raw({i + shift: v for i, v in enumerate(coeffs) if v})

    @classmethod
    def constant(cls, c: int) -> "IntLaurentPoly":
        return cls._raw({0: int(c)} if c else {})

    # -- inspection -------------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._c.get(0, 0)

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(e >= 0 for e in self._c)

    def has_negative_coefficient(self) -> bool:
        return any(v < 0 for v in self._c.values())

    def is_nonnegative(self) -> bool:
        """True for elements of N[q, q^-1] (the zero polynomial included)."""
        return all(v > 0 for v in self._c.values())

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(shift, coeffs)`` with ``self == sum coeffs[i] q^(i+shift)``."""
        if not self._c:
            return 0, []
        lo, hi = min(self._c), max(self._c)
        out = [0] * (hi - lo + 1)
        for e, v in self._c.items():
            out[e - lo] = v
        return lo, out

    # -- ring operations ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntLaurentPoly":
        if isinstance(other, IntLaurentPoly):
            return other
        if isinstance(other, int):
            return IntLaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return IntLaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "IntLaurentPoly":
        return IntLaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (e0, v0), = b.items()
            return IntLaurentPoly._raw({e + e0: v * v0 for e, v in a.items()})
        if len(b) > 24:
            return _dense_mul(self, other)
        c: dict[int, int] = {}
        get = c.get
        for e1, v1 in b.items():
            for e2, v2 in a.items():
                k = e1 + e2
                c[k] = get(k, 0) + v1 * v2
        return IntLaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntLaurentPoly":
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return IntLaurentPoly._raw({e * k: v ** -k})
            raise NotDivisible(f"{self} is not a unit")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntLaurentPoly":
        """Multiply by ``q^k``."""
        return IntLaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def dilate(self, a: int) -> "IntLaurentPoly":
        """Substitute ``q -> q^a``."""
        if a == 0:
            return IntLaurentPoly.constant(sum(self._c.values()))
        return IntLaurentPoly._raw({e * a: v for e, v in self._c.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntLaurentPoly.constant(other)
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- division -----------------------------------------------------------------

    def divmod(self, divisor: "IntLaurentPoly") -> tuple["IntLaurentPoly", "IntLaurentPoly"]:
        """Long division of the q-adic cores.

        Both operands are normalised to polynomials with nonzero constant term
        (a unit ``q^k`` is split off first); the remainder is returned on the
        dividend's scale.  Raises :class:`NotDivisible` if a leading coefficient
        fails to divide over the integers.
        """
        if not divisor._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO, ZERO
        sa, a = self.dense()
        sb, b = divisor.dense()
        lead = b[-1]
        n, m = len(a), len(b)
        if n < m:
            return ZERO, self
        a = list(a)
        quot = [0] * (n - m + 1)
        for i in range(n - m, -1, -1):
            top = a[i + m - 1]
            if top == 0:
                continue
            qi, r = divmod(top, lead)
            if r:
                raise NotDivisible(f"leading coefficient {lead} does not divide {top}")
            quot[i] = qi
            for j in range(m):
                a[i + j] -= qi * b[j]
        return (IntLaurentPoly.from_dense(quot, sa - sb),
                IntLaurentPoly.from_dense(a[: m - 1], sa))

    def exact_div(self, divisor: "IntLaurentPoly") -> "IntLaurentPoly":
        """Quotient in Z[q, q^-1]; raises :class:`NotDivisible` otherwise."""
        if not divisor._c:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return ZERO
        # strip powers of q from the divisor so its constant term is nonzero
        lo = divisor.min_degree
        d = divisor.shift(-lo)
        try:
            quot, rem = self.divmod(d)
        except NotDivisible:
            raise NotDivisible(f"{divisor} does not divide {self}") from None
        if rem:
            raise NotDivisible(f"{divisor} does not divide {self}")
        return quot.shift(-lo)

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.exact_div(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QRational(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QRational(other, self)

    # -- evaluation -----------------------------------------------------------------

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, x):
        """Evaluate at a number (float or complex); negative powers are allowed."""
        return sum(v * x ** e for e, v in self._c.items())

    # -- text ------------------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntLaurentPoly({format_poly(self)!r})"


def _dense_mul(p: IntLaurentPoly, r: IntLaurentPoly) -> IntLaurentPoly:
    sa, a = p.dense()
    sb, b = r.dense()
    out = [0] * (len(a) + len(b) - 1)
    nz_b = [(j, v) for j, v in enumerate(b) if v]
    for i, va in enumerate(a):
        if va:
            for j, vb in nz_b:
                out[i + j] += va * vb
    return IntLaurentPoly.from_dense(out, sa + sb)


ZERO = IntLaurentPoly()
ONE = IntLaurentPoly({0: 1})
Q = IntLaurentPoly({1: 1})

Coefficient = Union[int, IntLaurentPoly]


def monomial(e: int, c: int = 1) -> IntLaurentPoly:
    """``c * q^e``."""
    return IntLaurentPoly({e: c})


# -- text format ---------------------------------------------------------------------

def format_poly(p: IntLaurentPoly) -> str:
    """Canonical ascending rendering, e.g. ``'-q^-1 + 3 + 2*q^4'``."""
    if not p._c:
        return "0"
    parts = []
    for e, v in sorted(p._c.items()):
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append(("+ " if v > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*(?:\*\s*)?)?
        (?P<q>q(?:\s*\^\s*\{?\s*(?P<exp>-?\d+)\s*\}?)?)?
        \s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> IntLaurentPoly:
    """Parse the output of :func:`format_poly` (also accepts ``q^{k}`` and a leading '+').

    >>> parse_poly("-q^-1 + 3 + 2*q^4") == IntLaurentPoly({-1: -1, 0: 3, 4: 2})
    True
    """
    s = text.strip()
    if s == "0":
        return ZERO
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("q")):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        coef = int(m.group("coef")) if m.group("coef") else 1
        if m.group("q"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        pos = m.end()
    return IntLaurentPoly(coeffs)


# -- rational expressions ---------------------------------------------------------------

class QRational:
    """A formal quotient ``numerator / denominator`` of Laurent polynomials.

    Arithmetic never reduces by gcd; :meth:`normalize` either produces the exact
    Laurent-polynomial quotient or raises :class:`NotDivisible`.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Coefficient, denominator: Coefficient = 1):
        if isinstance(numerator, int):
            numerator = IntLaurentPoly.constant(numerator)
        if isinstance(denominator, int):
            denominator = IntLaurentPoly.constant(denominator)
        if not denominator:
            raise ZeroDivisionError("QRational with zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _coerce(other) -> "QRational":
        if isinstance(other, QRational):
            return other
        if isinstance(other, (int, IntLaurentPoly)):
            return QRational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.denominator == other.denominator:
            return QRational(self.numerator + other.numerator, self.denominator)
        return QRational(self.numerator * other.denominator + other.numerator * self.denominator,
                         self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self) -> "QRational":
        return QRational(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QRational(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QRational(self.numerator * other.denominator, self.denominator * other.numerator)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # equal values need not share a representation

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def normalize(self) -> IntLaurentPoly:
        return self.numerator.exact_div(self.denominator)

    def try_normalize(self) -> IntLaurentPoly | None:
        try:
            return self.normalize()
        except NotDivisible:
            return None

    def __str__(self) -> str:
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self) -> str:
        return f"QRational({self.numerator!s}, {self.denominator!s})"


def normalize(r: QRational) -> IntLaurentPoly:
    """Exact Laurent quotient of ``r``; raises :class:`NotDivisible` otherwise."""
    return r.normalize()


# -- q-analogs ----------------------------------------------------------------------------

def q_number(m: int, a: int = 1) -> IntLaurentPoly:
    """``[m]_{q^a} = 1 + q^a + ... + q^{a(m-1)}``.

    Negative ``m`` follows ``(y^m - 1)/(y - 1)``, i.e. ``[-m]_y = -y^{-m} [m]_y``,
    which is what the H3 / I2(m) closed forms need at small parameters.

    >>> str(q_number(3))
    '1 + q + q^2'
    >>> str(q_number(2, 2))
    '1 + q^2'
    >>> str(q_number(-2))
    '-q^-2 - q^-1'
    """
    if a < 1:
        raise ValueError("q_number needs a >= 1")
    if m >= 0:
        return IntLaurentPoly._raw({a * i: 1 for i in range(m)})
    return IntLaurentPoly._raw({a * i: -1 for i in range(m, 0)})


@lru_cache(maxsize=4096)
def q_binomial(n: int, k: int, a: int = 1) -> IntLaurentPoly:
    """Gaussian binomial in ``q^a``, built by successive exact divisions."""
    if n < 0:
        raise ValueError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    res = ONE
    for i in range(1, k + 1):
        # after step i, res = binom(n-k+i, i)
        res = (res * q_number(n - k + i, a)).exact_div(q_number(i, a))
    return res


def q_factorial(m: int, a: int = 1) -> IntLaurentPoly:
    res = ONE
    for i in range(2, m + 1):
        res = res * q_number(i, a)
    return res


def q_multinomial(parts: Iterable[int], a: int = 1) -> IntLaurentPoly:
    """``[sum parts]_y! / prod [part]_y!`` with ``y = q^a``.

    Computed as a product of Gaussian binomials, each obtained by exact
    division, so intermediate values stay polynomial.

    >>> str(q_multinomial([2, 2]))
    '1 + q + 2*q^2 + q^3 + q^4'
    """
    parts = [int(p) for p in parts]
    if not parts:
        raise ValueError("q_multinomial needs at least one part")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    res = ONE
    total = 0
    for p in parts:
        total += p
        if p:
            res = res * q_binomial(total, p, a)
    return res


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntLaurentPoly:
    """The d-th cyclotomic polynomial, by dividing ``q^d - 1`` by the smaller ones.

    >>> str(cyclotomic(6))
    '1 - q + q^2'
    """
    if d < 1:
        raise ValueError("cyclotomic needs d >= 1")
    p = IntLaurentPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


class NonConstant(ValueError):
    """The value at a primitive root of unity is not a rational integer.

    ``remainder`` is the reduction of the polynomial modulo the cyclotomic
    polynomial, as evidence.
    """

    def __init__(self, remainder: IntLaurentPoly, d: int):
        super().__init__(f"value at a primitive {d}-th root of unity is {remainder}, not an integer")
        self.remainder = remainder
        self.d = d


def reduce_mod_cyclotomic(p: IntLaurentPoly, d: int) -> IntLaurentPoly:
    """Remainder of ``p`` modulo ``Phi_d``, after folding exponents mod ``d``.

    Folding ``q^e -> q^(e mod d)`` multiplies each term by a power of
    ``q^d``, which is 1 at any primitive d-th root of unity; this also clears
    negative exponents.
    """
    folded: dict[int, int] = {}
    for e, v in p._c.items():
        k = e % d
        folded[k] = folded.get(k, 0) + v
    f = IntLaurentPoly(folded)
    if not f:
        return ZERO
    _, rem = f.divmod(cyclotomic(d))
    return rem


def specialize_at_root(p: IntLaurentPoly, d: int) -> int:
    """Value of ``p`` at a primitive d-th root of unity.

    Raises :class:`NonConstant` (carrying the remainder) when that value is
    not a rational integer.

    >>> specialize_at_root(q_number(10), 2)
    0
    >>> specialize_at_root(q_number(6), 3)
    0
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return p.eval_at_one()
    rem = reduce_mod_cyclotomic(p, d)
    if not rem.is_constant():
        raise NonConstant(rem, d)
    return rem.constant_value()


def eval_at_one(p: IntLaurentPoly) -> int:
    return p.eval_at_one()


def multinomial(parts: Iterable[int]) -> int:
    """Ordinary multinomial coefficient."""
    parts = list(parts)
    res = math.factorial(sum(parts))
    for p in parts:
        res //= math.factorial(p)
    return res
