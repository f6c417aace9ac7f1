"""Exact arithmetic in Z[t^{+-1}, s] and the fraction field Q(t, s).

A LaurentPoly maps exponent pairs (a, b) to nonzero coefficients, where a is
the (possibly negative) power of t and b >= 0 is the power of s.  The zero
polynomial is the empty map.  Coefficients are exact: Python ints, or
Fractions inside RationalFn components.  Nothing in this module (or package)
touches floating point.

The weighted degree of a term is a + 2b; this weighting drives both the
canonical printing order and the flattening operation used to read Jordan
cell data off a polynomial invariant.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .errors import (
    NotPolynomialError,
    OddWeightedDegreeError,
    ZeroPolynomialError,
)

Coeff = Union[int, Fraction]


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c)!r}")


class LaurentPoly:
    """Immutable sparse Laurent polynomial in t (any power) and s (power >= 0)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Coeff] | None = None):
        clean: dict[tuple[int, int], Coeff] = {}
        if terms:
            for (a, b), c in terms.items():
                if b < 0:
                    raise ValueError("s never appears with negative exponent")
                c = _normalize_coeff(c)
                if c != 0:
                    clean[(int(a), int(b))] = c
        # lex order on (a, b) keeps equality/hash/printing structural
        object.__setattr__(self, "_terms", dict(sorted(clean.items())))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Coeff) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Coeff = 1) -> "LaurentPoly":
        return cls({(a, b): c})

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        return cls({(power, 0): 1})

    @classmethod
    def s(cls, power: int = 1) -> "LaurentPoly":
        return cls({(0, power): 1})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, a: int, b: int) -> Coeff:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_t_only(self) -> bool:
        return all(b == 0 for (_, b) in self._terms)

    def is_s_only(self) -> bool:
        return all(a == 0 for (a, _) in self._terms)

    def min_t_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return min(a for (a, _) in self._terms)

    def min_s_exponent(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return min(b for (_, b) in self._terms)

    def content(self) -> Fraction:
        """gcd of numerators over lcm of denominators; 0 for the zero polynomial."""
        if not self._terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self._terms.values()]
        dens = [Fraction(c).denominator for c in self._terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, abs(n))
        l = 1
        for d in dens:
            l = lcm(l, d)
        return Fraction(g, l)

    def min_lex_exponent(self) -> tuple[int, int]:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no exponents")
        return min(self._terms)

    def leading_term(self) -> tuple[tuple[int, int], Coeff]:
        """Term with the lex-largest exponent pair (a, b)."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        key = max(self._terms)
        return key, self._terms[key]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other: Union["LaurentPoly", int, Fraction]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[tuple[int, int], Coeff] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "LaurentPoly":
        c = _normalize_coeff(c)
        if c == 0:
            return LaurentPoly()
        return LaurentPoly({key: v * c for key, v in self._terms.items()})

    def shift(self, dt: int, ds: int = 0) -> "LaurentPoly":
        """Multiply by the monomial t^dt s^ds."""
        return LaurentPoly({(a + dt, b + ds): c for (a, b), c in self._terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers live in RationalFn")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structural equality -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented  # lets RationalFn handle mixed comparisons
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def weighted_degree(q: LaurentPoly) -> int:
    """max{a + 2b} over stored terms; undefined on zero."""
    if q.is_zero():
        raise ZeroPolynomialError("weighted degree of the zero polynomial")
    return max(a + 2 * b for (a, b) in q.terms)


def flat(q: LaurentPoly) -> LaurentPoly:
    """Shift every t-exponent by -weighted_degree(q)/2, stripping the dimension shift.

    Requires the weighted degree to be even; geometric inputs always satisfy
    this, and an odd degree is reported rather than rounded.
    """
    m = weighted_degree(q)
    if m % 2 != 0:
        raise OddWeightedDegreeError(f"weighted degree {m} is odd")
    return q.shift(-m // 2)


def poly_from_int_terms(triples: Iterable[tuple[int, int, int]]) -> LaurentPoly:
    out: dict[tuple[int, int], Coeff] = {}
    for a, b, c in triples:
        out[(a, b)] = out.get((a, b), 0) + c
    return LaurentPoly(out)


# -- printing ---------------------------------------------------------------


def _print_order_key(term: tuple[tuple[int, int], Coeff]):
    (a, b), _ = term
    return (-(a + 2 * b), (a, b))


def _format_monomial(a: int, b: int, c: Coeff) -> str:
    parts = []
    if a != 0:
        parts.append("t" if a == 1 else f"t^{a}")
    if b != 0:
        parts.append("s" if b == 1 else f"s^{b}")
    if not parts:
        return str(c)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def format_poly(q: LaurentPoly) -> str:
    """Canonical rendering: descending in a + 2b, ties broken lex on (a, b)."""
    if q.is_zero():
        return "0"
    pieces = []
    for (a, b), c in sorted(q.items(), key=_print_order_key):
        text = _format_monomial(a, b, c)
        if not pieces:
            pieces.append(text)
        elif text.startswith("-"):
            pieces.append("- " + text[1:])
        else:
            pieces.append("+ " + text)
    return " ".join(pieces)


# -- exact division and gcd helpers -----------------------------------------


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Return num/den when den divides num exactly in Q[t^{+-1}, s], else None.

    Division with remainder by a single divisor under the lex monomial order:
    the quotient exists iff the remainder comes out zero.  A valid quotient's
    lex-minimal exponent equals min(num) - min(den) (the lex-minimal term of a
    product never cancels), which bounds the descent and forces termination.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    (la, lb), lc = den.leading_term()
    na, nb = num.min_lex_exponent()
    ma, mb = den.min_lex_exponent()
    floor = (na - ma, nb - mb)
    quotient: dict[tuple[int, int], Coeff] = {}
    rem = num
    while not rem.is_zero():
        (ra, rb), rc = rem.leading_term()
        db = rb - lb
        da = ra - la
        if db < 0 or (da, db) < floor:
            return None
        factor = Fraction(rc) / Fraction(lc)
        quotient[(da, db)] = quotient.get((da, db), 0) + factor
        rem = rem - den.shift(da, db).scale(factor)
        if not rem.is_zero() and rem.leading_term()[0] >= (ra, rb):
            return None
    return LaurentPoly(quotient)


def _uni_coeffs(p: LaurentPoly, var: str) -> tuple[int, list[Fraction]]:
    """Dense coefficient list of a polynomial univariate in t or s.

    Returns (offset, coeffs) with p = sum coeffs[i] * var^(offset + i).
    """
    exps = {(a if var == "t" else b): Fraction(c) for (a, b), c in p.items()}
    lo, hi = min(exps), max(exps)
    return lo, [exps.get(e, Fraction(0)) for e in range(lo, hi + 1)]


def _uni_gcd(p: LaurentPoly, q: LaurentPoly, var: str) -> LaurentPoly:
    """Monic polynomial gcd of two nonzero univariate polynomials (Euclid over Q)."""

    def trim(v: list[Fraction]) -> list[Fraction]:
        while v and v[-1] == 0:
            v.pop()
        return v

    def mod(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        u = u[:]
        while len(u) >= len(v) and trim(u):
            factor = u[-1] / v[-1]
            shift = len(u) - len(v)
            for i, c in enumerate(v):
                u[shift + i] -= factor * c
            trim(u)
        return u

    _, pu = _uni_coeffs(p, var)
    _, qu = _uni_coeffs(q, var)
    a, b = trim(pu[:]), trim(qu[:])
    while b:
        a, b = b, trim(mod(a, b))
    lead = a[-1]
    mono = [c / lead for c in a]
    if var == "t":
        return LaurentPoly({(i, 0): c for i, c in enumerate(mono) if c != 0})
    return LaurentPoly({(0, i): c for i, c in enumerate(mono) if c != 0})


class RationalFn:
    """Element of Q(t, s) as a normalized fraction of Laurent polynomials.

    Normalization: common monomial factors cancelled (den anchored at t- and
    s-exponent zero), integer coefficients with coprime contents, den's
    leading coefficient positive, exact polynomial division applied when it
    succeeds, and a univariate gcd cancelled when both parts share a single
    variable.  Equal values always compare equal via cross-multiplication,
    so full canonicity is not required, only compactness.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = _normalize_fraction(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RationalFn":
        return cls(LaurentPoly.one())

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "RationalFn":
        value = Fraction(value)
        return cls(
            LaurentPoly.constant(value.numerator),
            LaurentPoly.constant(value.denominator),
        )

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p)

    # -- field operations --------------------------------------------------

    def __add__(self, other: "RationalFn") -> "RationalFn":
        other = _coerce(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        other = _coerce(other)
        return RationalFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __mul__(self, other) -> "RationalFn":
        other = _coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = _coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return RationalFn(self.den, self.num)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one() or exact_div(self.num, self.den) is not None

    def as_poly(self) -> LaurentPoly:
        """The underlying polynomial, requiring integer coefficients.

        Raises NotPolynomialError when the denominator does not divide out or
        a coefficient is not an integer.
        """
        if self.den == LaurentPoly.one():
            q = self.num
        else:
            maybe = exact_div(self.num, self.den)
            if maybe is None:
                raise NotPolynomialError(f"{self} is not a polynomial")
            q = maybe
        if not q.is_integral():
            raise NotPolynomialError(f"{self} has non-integer coefficients")
        return q

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = _coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is by cross-multiplication, not structure

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"RationalFn({self!s})"

    def __str__(self) -> str:
        if self.den == LaurentPoly.one():
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def _coerce(value) -> RationalFn:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFn(value)
    if isinstance(value, (int, Fraction)):
        return RationalFn.from_fraction(value)
    raise TypeError(f"cannot coerce {type(value)!r} to RationalFn")


def _clear_denominators(p: LaurentPoly) -> tuple[LaurentPoly, int]:
    """Scale to integer coefficients; returns (integer poly, multiplier used)."""
    mult = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            mult = lcm(mult, c.denominator)
    if mult == 1:
        return p, 1
    return p.scale(mult), mult


def _normalize_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return LaurentPoly.zero(), LaurentPoly.one()

    # clear to integer coefficients, compensating on the opposite side
    num, nmult = _clear_denominators(num)
    den, dmult = _clear_denominators(den)
    if dmult != 1:
        num = num.scale(dmult)
    if nmult != 1:
        den = den.scale(nmult)

    # anchor the denominator's monomial support at the origin
    dt = den.min_t_exponent()
    ds = min(den.min_s_exponent(), num.min_s_exponent())
    if dt or ds:
        num = num.shift(-dt, -ds)
        den = den.shift(-dt, -ds)

    # coefficient normalization: coprime integer contents, positive den lead
    g = gcd(int(num.content()), int(den.content()))
    if g > 1:
        num = num.scale(Fraction(1, g))
        den = den.scale(Fraction(1, g))
    if den.leading_term()[1] < 0:
        num, den = -num, -den

    if den == LaurentPoly.one():
        return num, den

    quotient = exact_div(num, den)
    if quotient is not None and quotient.is_integral():
        return quotient, LaurentPoly.one()

    shared_var = None
    if num.is_t_only() and den.is_t_only():
        shared_var = "t"
    elif num.is_s_only() and den.is_s_only():
        shared_var = "s"
    if shared_var is not None:
        g_poly = _uni_gcd(num, den, shared_var)
        if g_poly != LaurentPoly.one():
            num2 = exact_div(num, g_poly)
            den2 = exact_div(den, g_poly)
            if num2 is not None and den2 is not None:
                return _normalize_fraction(num2, den2)
    return num, den
