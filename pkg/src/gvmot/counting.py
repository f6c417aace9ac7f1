"""Numerical classes, phases, and the inclusion-exclusion counting pipeline.

A class is a pair (beta, k) in the curve-class lattice plus the holomorphic
Euler number.  The central charge -k + (B + i omega) . beta assigns each
class an exact phase; counts of semistable objects enter as formal words of
delta letters, their logarithm is the alternating sum over ordered same-phase
decompositions, and evaluation happens in a split-stratum model where the
geometry is reduced to per-class atoms and a symmetric ext-defect table.

Phase comparisons never touch floating point: two classes share a phase
exactly when their (Im Z, -Re Z) pairs are proportional with positive ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct
from math import factorial, gcd, lcm
from typing import Callable, Iterable, Mapping

from .errors import (
    AsymmetricDefectError,
    ConeNotPointedError,
    MissingAtomError,
    NotEffectiveError,
    NotPolynomialError,
    ResourceLimitError,
    ZeroChargeError,
)
from .laurent import LaurentPoly, RationalFn, flat, weighted_degree
from .lefschetz import JordanCensus, census_count
from .motives import upsilon_rel
from .stacks import StackClass

MODEL_NOTE = (
    "evaluation model: split strata with constant ext defect per class pair; "
    "direct sums merge by the model's census combinator"
)


@dataclass(frozen=True, order=True)
class NumClass:
    """A numerical class: curve part beta (integer vector) and Euler pairing k."""

    beta: tuple[int, ...]
    k: int

    def __init__(self, beta, k: int):
        object.__setattr__(self, "beta", tuple(int(b) for b in beta))
        object.__setattr__(self, "k", int(k))

    def __neg__(self) -> "NumClass":
        return NumClass(tuple(-b for b in self.beta), -self.k)

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(tuple(a + b for a, b in zip(self.beta, other.beta)), self.k + other.k)

    def __repr__(self) -> str:
        return f"NumClass(beta={self.beta}, k={self.k})"


class ClassLattice:
    """The curve-class lattice with a spanning set of effective-cone generators.

    Immutable after construction; membership memoization is per call, so a
    lattice can be shared freely across threads.
    """

    __slots__ = ("rank", "generators")

    def __init__(self, rank: int, generators: Iterable[tuple[int, ...]]):
        rank = int(rank)
        gens = tuple(tuple(int(c) for c in g) for g in generators)
        if rank < 1:
            raise ValueError("lattice rank must be positive")
        for g in gens:
            if len(g) != rank:
                raise ValueError(f"generator {g} has wrong length for rank {rank}")
            if all(c == 0 for c in g):
                raise ValueError("generators must be nonzero")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "generators", gens)

    def check_positive(self, omega: tuple[Fraction, ...]) -> None:
        for g in self.generators:
            if _dot(omega, g) <= 0:
                raise ConeNotPointedError(
                    f"functional {tuple(map(str, omega))} not positive on generator {g}"
                )

    def is_effective(
        self,
        beta: tuple[int, ...],
        omega: tuple[Fraction, ...],
        _memo: dict | None = None,
        budget: "_Budget | None" = None,
    ) -> bool:
        """Membership of beta in the monoid generated by the effective generators.

        Bounded search: subtracting a generator strictly lowers the
        omega-degree, so the explored region is the finite set of lattice
        points below beta.  Iterative so arbitrarily deep classes cannot
        overflow the interpreter stack.
        """
        self.check_positive(omega)
        beta = tuple(int(b) for b in beta)
        if len(beta) != self.rank:
            raise ValueError(f"class {beta} has wrong rank for this lattice")
        cache = {} if _memo is None else _memo
        zero = (0,) * self.rank
        generator_degrees = [_dot(omega, g) for g in self.generators]
        # coordinates no generator can move toward zero are dead ends
        sign_floor = [min(g[i] for g in self.generators) for i in range(self.rank)]
        sign_ceil = [max(g[i] for g in self.generators) for i in range(self.rank)]

        def hopeless(b: tuple[int, ...]) -> bool:
            for i, c in enumerate(b):
                if c < 0 and sign_floor[i] >= 0:
                    return True
                if c > 0 and sign_ceil[i] <= 0:
                    return True
            return False

        def children(b: tuple[int, ...]) -> list[tuple[int, ...]]:
            deg = _dot(omega, b)
            out = []
            for g, gdeg in zip(self.generators, generator_degrees):
                if gdeg <= deg:
                    out.append(tuple(x - y for x, y in zip(b, g)))
            return out

        if beta == zero:
            return True
        # short-circuiting DFS over the OR-dag, iterative so deep classes
        # cannot overflow the interpreter stack
        frames: list[list] = [[beta, None, 0]]
        while frames:
            frame = frames[-1]
            b = frame[0]
            if b in cache:
                frames.pop()
                continue
            if hopeless(b):
                cache[b] = False
                frames.pop()
                continue
            if frame[1] is None:
                if budget is not None:
                    budget.spend()
                frame[1] = children(b)
            descended = False
            while frame[2] < len(frame[1]):
                child = frame[1][frame[2]]
                if child == zero or cache.get(child) is True:
                    cache[b] = True
                    break
                if child in cache:
                    frame[2] += 1
                    continue
                frames.append([child, None, 0])
                descended = True
                break
            else:
                cache[b] = False
            if not descended and b in cache:
                frames.pop()
        return cache[beta]

    def monoid_elements(
        self,
        omega: tuple[Fraction, ...],
        bound: Fraction,
        budget: "_Budget | None" = None,
    ) -> list[tuple[int, ...]]:
        """All nonzero monoid elements of omega-degree at most the bound."""
        self.check_positive(omega)
        zero = (0,) * self.rank
        seen = {zero}
        frontier = [zero]
        while frontier:
            current = frontier.pop()
            for g in self.generators:
                if budget is not None:
                    budget.spend()
                candidate = tuple(x + y for x, y in zip(current, g))
                if candidate not in seen and _dot(omega, candidate) <= bound:
                    seen.add(candidate)
                    frontier.append(candidate)
        seen.discard(zero)
        return sorted(seen)


def _dot(omega: tuple[Fraction, ...], beta: tuple[int, ...]) -> Fraction:
    return sum((Fraction(w) * b for w, b in zip(omega, beta)), Fraction(0))


@dataclass(frozen=True)
class CentralCharge:
    """The linear functional (beta, k) -> -k + (B + i omega) . beta."""

    b_field: tuple[Fraction, ...]
    omega: tuple[Fraction, ...]

    def __init__(self, b_field, omega):
        object.__setattr__(self, "b_field", tuple(Fraction(x) for x in b_field))
        object.__setattr__(self, "omega", tuple(Fraction(x) for x in omega))
        if len(self.b_field) != len(self.omega):
            raise ValueError("B and omega must have the same length")

    def value(self, v: NumClass) -> tuple[Fraction, Fraction]:
        """Exact (real, imaginary) parts of the charge on v."""
        if len(v.beta) != len(self.omega):
            raise ValueError("class rank does not match the charge")
        re = -Fraction(v.k) + _dot(self.b_field, v.beta)
        im = _dot(self.omega, v.beta)
        return re, im


class Phase:
    """Exact phase of a nonzero charge value, normalized to the interval (0, 2].

    Stored as the primitive integer direction of (re, im); equality of phases
    is equality of directions.
    """

    __slots__ = ("direction",)

    def __init__(self, re: Fraction, im: Fraction):
        if re == 0 and im == 0:
            raise ZeroChargeError("central charge vanishes; phase undefined")
        mult = lcm(re.denominator, im.denominator)
        a, b = int(re * mult), int(im * mult)
        g = gcd(abs(a), abs(b))
        object.__setattr__(self, "direction", (a // g, b // g))

    @property
    def re_sign(self) -> int:
        a, _ = self.direction
        return (a > 0) - (a < 0)

    @property
    def im_sign(self) -> int:
        _, b = self.direction
        return (b > 0) - (b < 0)

    def in_unit_range(self) -> bool:
        """True when the phase lies in (0, 1]: upper half plane or negative reals."""
        return self.im_sign > 0 or (self.im_sign == 0 and self.re_sign < 0)

    def exact_angle(self) -> Fraction | None:
        """The angle as a multiple of 1/2 when it is one, else None."""
        table = {
            (-1, 0): Fraction(1),
            (0, 1): Fraction(1, 2),
            (0, -1): Fraction(3, 2),
            (1, 0): Fraction(2),
        }
        return table.get(self.direction)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Phase) and self.direction == other.direction

    def __hash__(self) -> int:
        return hash(self.direction)

    def __repr__(self) -> str:
        angle = self.exact_angle()
        if angle is not None:
            return f"Phase({angle})"
        return f"Phase(direction={self.direction})"


def phase(z: CentralCharge, v: NumClass) -> Phase:
    return Phase(*z.value(v))


class FreeHallElement:
    """Lambda-linear combination of words of delta letters (free concatenation)."""

    __slots__ = ("words",)

    def __init__(self, words: Mapping[tuple[NumClass, ...], RationalFn] | None = None):
        clean: dict[tuple[NumClass, ...], RationalFn] = {}
        if words:
            for word, coeff in words.items():
                if coeff:
                    clean[tuple(word)] = coeff
        object.__setattr__(self, "words", clean)

    @classmethod
    def zero(cls) -> "FreeHallElement":
        return cls()

    @classmethod
    def letter(cls, v: NumClass) -> "FreeHallElement":
        return cls({(v,): RationalFn.one()})

    def items(self):
        return self.words.items()

    def is_zero(self) -> bool:
        return not self.words

    def __add__(self, other: "FreeHallElement") -> "FreeHallElement":
        out = dict(self.words)
        for word, coeff in other.words.items():
            acc = out.get(word)
            out[word] = coeff if acc is None else acc + coeff
        return FreeHallElement(out)

    def __sub__(self, other: "FreeHallElement") -> "FreeHallElement":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "FreeHallElement":
        if isinstance(c, (int, Fraction)):
            c = RationalFn.from_fraction(c)
        return FreeHallElement({word: coeff * c for word, coeff in self.words.items()})

    def star(self, other: "FreeHallElement") -> "FreeHallElement":
        """Concatenation product, graded by the total class of each word."""
        out: dict[tuple[NumClass, ...], RationalFn] = {}
        for w1, c1 in self.words.items():
            for w2, c2 in other.words.items():
                word = w1 + w2
                c = c1 * c2
                acc = out.get(word)
                out[word] = c if acc is None else acc + c
        return FreeHallElement(out)

    __mul__ = star

    def commutator(self, other: "FreeHallElement") -> "FreeHallElement":
        return self.star(other) - other.star(self)

    def total_class(self, word: tuple[NumClass, ...]) -> NumClass:
        total = word[0]
        for v in word[1:]:
            total = total + v
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeHallElement):
            return NotImplemented
        if set(self.words) != set(other.words):
            return False
        return all(self.words[w] == other.words[w] for w in self.words)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FreeHallElement({len(self.words)} words)"


# -- decomposition enumeration ------------------------------------------------


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, cap: int):
        self.remaining = cap

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise ResourceLimitError("decomposition enumeration exceeded the cap")


DEFAULT_COMPOSITION_CAP = 10**6


def same_phase_decompositions(
    lattice: ClassLattice,
    charge: CentralCharge,
    v: NumClass,
    max_compositions: int = DEFAULT_COMPOSITION_CAP,
) -> list[tuple[NumClass, ...]]:
    """Ordered decompositions of v into effective classes sharing v's phase.

    For a class of phase one (beta = 0, k > 0) the pieces are the
    zero-dimensional classes (0, k').  Otherwise each piece's k is forced by
    phase proportionality and must come out integral.  Finiteness comes from
    strictly positive omega-degrees; the budget caps pathological inputs.
    """
    lattice.check_positive(charge.omega)
    if len(v.beta) != lattice.rank:
        raise ValueError(f"class {v} has wrong rank for this lattice")
    budget = _Budget(max_compositions)
    zero_beta = (0,) * lattice.rank

    if v.beta == zero_beta:
        if v.k <= 0:
            raise NotEffectiveError(f"{v} is not in the phase-(0,1] effective range")
        result: list[tuple[NumClass, ...]] = []
        stack: list[tuple[int, tuple[NumClass, ...]]] = [(v.k, ())]
        while stack:
            rem, acc = stack.pop()
            if rem == 0:
                budget.spend()
                result.append(acc)
                continue
            for j in range(rem, 0, -1):
                budget.spend()
                stack.append((rem - j, acc + (NumClass(zero_beta, j),)))
        return result

    membership_memo: dict = {}
    if not lattice.is_effective(v.beta, charge.omega, _memo=membership_memo):
        raise NotEffectiveError(f"beta part of {v} is not effective")

    re_v, im_v = charge.value(v)
    slope = (-re_v) / im_v  # k - B.beta over omega.beta, shared by all pieces

    pieces: list[NumClass] = []
    for beta in lattice.monoid_elements(charge.omega, im_v, budget=budget):
        budget.spend()
        k_frac = _dot(charge.b_field, beta) + slope * _dot(charge.omega, beta)
        if k_frac.denominator == 1:
            pieces.append(NumClass(beta, int(k_frac)))

    effective = {p.beta: True for p in pieces}
    effective[zero_beta] = True

    result = []
    walk: list[tuple[tuple[int, ...], int, tuple[NumClass, ...]]] = [(v.beta, v.k, ())]
    while walk:
        rem_beta, rem_k, acc = walk.pop()
        if rem_beta == zero_beta:
            if rem_k == 0:
                budget.spend()
                result.append(acc)
            continue
        for p in reversed(pieces):
            budget.spend()
            nxt = tuple(x - y for x, y in zip(rem_beta, p.beta))
            if nxt not in effective:
                effective[nxt] = lattice.is_effective(nxt, charge.omega, _memo=membership_memo)
            if effective[nxt]:
                walk.append((nxt, rem_k - p.k, acc + (p,)))
    return result


def semistable_log(
    lattice: ClassLattice,
    charge: CentralCharge,
    v: NumClass,
    max_compositions: int = DEFAULT_COMPOSITION_CAP,
) -> FreeHallElement:
    """Inclusion-exclusion logarithm: sum over ordered same-phase decompositions
    of (-1)^{n-1}/n times the word of delta letters."""
    out = FreeHallElement.zero()
    for decomposition in same_phase_decompositions(lattice, charge, v, max_compositions):
        n = len(decomposition)
        coeff = RationalFn.from_fraction(Fraction((-1) ** (n - 1), n))
        out = out + FreeHallElement({decomposition: coeff})
    return out


def semistable_exp(
    lattice: ClassLattice,
    charge: CentralCharge,
    v: NumClass,
    log_table: Mapping[NumClass, FreeHallElement] | None = None,
    max_compositions: int = DEFAULT_COMPOSITION_CAP,
) -> FreeHallElement:
    """Formal exponential inverse: reconstructs the delta generator from logs.

    delta(v) = sum over decompositions of (1/n!) times the star product of the
    logarithm elements of the pieces; with the default table this is exactly
    the single word (v,).
    """
    table: dict[NumClass, FreeHallElement] = dict(log_table) if log_table else {}

    def log_of(piece: NumClass) -> FreeHallElement:
        if piece not in table:
            table[piece] = semistable_log(lattice, charge, piece, max_compositions)
        return table[piece]

    out = FreeHallElement.zero()
    for decomposition in same_phase_decompositions(lattice, charge, v, max_compositions):
        n = len(decomposition)
        product = log_of(decomposition[0])
        for piece in decomposition[1:]:
            product = product.star(log_of(piece))
        out = out + product.scale(Fraction(1, factorial(n)))
    return out


# -- evaluation model ----------------------------------------------------------


def product_combinator(values: list[LaurentPoly]) -> LaurentPoly:
    """Default direct-sum combinator: multiply the component values."""
    out = LaurentPoly.one()
    for value in values:
        out = out * value
    return out


def census_convolution(values: list[LaurentPoly]) -> LaurentPoly:
    """Alternative combinator: Clebsch-Gordan convolution of Jordan data.

    Reads each value as a dimension shift times a census, convolves strings
    pairwise ((a1,l1) x (a2,l2) -> sizes l1+l2-1-2i at degrees a1+a2+2i), and
    reassembles the polynomial.
    """
    out = LaurentPoly.one()
    for value in values:
        if out.is_zero() or value.is_zero():
            return LaurentPoly.zero()
        out = _convolve_pair(out, value)
    return out


def _census_of(p: LaurentPoly) -> tuple[int, dict[tuple[int, int], int]]:
    m = weighted_degree(p)
    cells = {(a, b + 1): c for (a, b), c in flat(p).items()}
    return m // 2, cells


def _convolve_pair(p1: LaurentPoly, p2: LaurentPoly) -> LaurentPoly:
    d1, c1 = _census_of(p1)
    d2, c2 = _census_of(p2)
    cells: dict[tuple[int, int], int] = {}
    for (a1, l1), n1 in c1.items():
        for (a2, l2), n2 in c2.items():
            for i in range(min(l1, l2)):
                key = (a1 + a2 + 2 * i, l1 + l2 - 1 - 2 * i)
                cells[key] = cells.get(key, 0) + n1 * n2
    return LaurentPoly({(d1 + d2 + a, l - 1): n for (a, l), n in cells.items()})


class EvalModel:
    """Per-class atoms plus a symmetric ext-defect table and a census combinator.

    The defect e(v1, v2) is the constant difference dim Ext^1 - dim Hom on the
    stratum of the pair; symmetry is forced (Serre duality plus vanishing Euler
    pairing on these classes), so asymmetric tables are rejected outright.
    """

    __slots__ = ("atoms", "ext_defect", "combine")

    def __init__(
        self,
        atoms: Mapping[NumClass, StackClass],
        ext_defect: Iterable[tuple[NumClass, NumClass, int]] = (),
        combine: Callable[[list[LaurentPoly]], LaurentPoly] | None = None,
    ):
        table: dict[tuple[NumClass, NumClass], int] = {}
        for v1, v2, e in ext_defect:
            for key in ((v1, v2), (v2, v1)):
                if key in table and table[key] != int(e):
                    raise AsymmetricDefectError(
                        f"ext defect not symmetric on {key[0]} and {key[1]}"
                    )
                table[key] = int(e)
        object.__setattr__(self, "atoms", dict(atoms))
        object.__setattr__(self, "ext_defect", table)
        object.__setattr__(self, "combine", combine or product_combinator)

    def atom(self, v: NumClass) -> StackClass:
        try:
            return self.atoms[v]
        except KeyError:
            raise MissingAtomError(f"no atom for class {v}") from None

    def defect(self, v1: NumClass, v2: NumClass) -> int:
        return self.ext_defect.get((v1, v2), 0)


def evaluate(f: FreeHallElement, model: EvalModel) -> RationalFn:
    """Value of a free Hall element in the split-stratum model.

    A word contributes L^{sum of pairwise defects} times the combined value of
    its letters' atoms, extended bilinearly over the atom parts and linearly
    over words.  A letter with an empty stack class (empty moduli) kills its
    word; the empty word is the unit and evaluates to 1.
    """
    total = RationalFn.zero()
    for word, coeff in f.items():
        exponent = 0
        for i in range(len(word)):
            for j in range(i + 1, len(word)):
                exponent += model.defect(word[i], word[j])
        lefschetz_power = RationalFn.from_poly(LaurentPoly.t(2 * exponent))
        parts_per_letter = [model.atom(v).parts for v in word]
        word_value = RationalFn.zero()
        for choice in _iproduct(*parts_per_letter):
            part_coeff = RationalFn.one()
            for c, _ in choice:
                part_coeff = part_coeff * c
            combined = model.combine([upsilon_rel(expr) for _, expr in choice])
            word_value = word_value + part_coeff * RationalFn.from_poly(combined)
        total = total + coeff * lefschetz_power * word_value
    return total


def counting_polynomial(
    lattice: ClassLattice,
    charge: CentralCharge,
    v: NumClass,
    model: EvalModel,
    max_compositions: int = DEFAULT_COMPOSITION_CAP,
) -> RationalFn:
    """The motivic count of phase-(0,1] semistables of class v, pushed to its base.

    Classes in the shifted range (1, 2] evaluate through their negative, and
    classes outside both ranges count zero.
    """
    if len(v.beta) != lattice.rank:
        raise ValueError(f"class {v} has wrong rank for this lattice")
    zero_beta = (0,) * lattice.rank
    in_positive = (v.beta != zero_beta and lattice.is_effective(v.beta, charge.omega)) or (
        v.beta == zero_beta and v.k > 0
    )
    if in_positive:
        gm = RationalFn.from_poly(LaurentPoly.t(2) - LaurentPoly.one())
        log_elem = semistable_log(lattice, charge, v, max_compositions)
        return gm * evaluate(log_elem, model)
    neg = -v
    in_negative = (neg.beta != zero_beta and lattice.is_effective(neg.beta, charge.omega)) or (
        neg.beta == zero_beta and neg.k > 0
    )
    if in_negative:
        return counting_polynomial(lattice, charge, neg, model, max_compositions)
    return RationalFn.zero()


def gv_from_polynomial(p: RationalFn | LaurentPoly, g: int) -> int:
    """Genus-g count read off a polynomial invariant.

    Flattens the polynomial, reads the Jordan census from its exponents
    (degree = t-exponent, size = s-exponent + 1), and applies the closed-form
    alternating count.  Requires an honest polynomial in Z[t, s].
    """
    if isinstance(p, RationalFn):
        q = p.as_poly()
    else:
        q = p
        if not q.is_integral():
            raise NotPolynomialError("polynomial has non-integer coefficients")
    if q.is_zero():
        return 0
    if any(a < 0 for (a, _) in q.terms):
        raise NotPolynomialError("negative t-exponents: not a polynomial invariant")
    cells = {(a, b + 1): c for (a, b), c in flat(q).items()}
    return census_count(JordanCensus(cells), g)
