"""Exact arithmetic for multivariate polynomials and factored rational functions.

Polynomials live in Q[u1, ..., ul] where l is the rank of the acting torus;
every coefficient is a `fractions.Fraction`, so all arithmetic is exact and
equality is decidable.  Rational functions are kept with their denominators
factored into primitive integer linear forms (the only denominators that
arise from fixed-point data), which reduces simplification to repeated exact
division by linear forms -- no general multivariate GCD is ever needed.

Conventions: monomial u1^e1 * ... * ul^el has cohomological degree
2*(e1 + ... + el), and the canonical term order is graded lexicographic with
u1 > u2 > ... > ul.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class RankMismatch(ValueError):
    """Operands built over different torus ranks."""


class NotPolynomialError(Exception):
    """A factored rational that should have cancelled to a polynomial did not.

    Carries the offending fraction in `fraction`, and the per-fixed-point
    terms in `per_point` when raised from a localization sum.
    """

    def __init__(self, fraction, per_point=None, message=None):
        self.fraction = fraction
        self.per_point = per_point
        if message is None:
            message = f"denominator factors survive cancellation: {fraction}"
        super().__init__(message)


def _grlex(exponents):
    # graded lexicographic sort key, u1 > u2 > ... > ul
    return (sum(exponents), exponents)


def _check_same_rank(a, b):
    if a.rank != b.rank:
        raise RankMismatch(f"rank {a.rank} vs rank {b.rank}")


class Polynomial:
    """Multivariate polynomial over Q in normalized form (no zero terms stored).

    `terms` maps exponent tuples of length `rank` to nonzero Fractions; the
    zero polynomial is the empty map.  Instances are immutable by convention:
    no method mutates `terms`.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        rank = operator.index(rank)
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        clean = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(operator.index(e) for e in exponents)
            if len(exponents) != rank:
                raise ValueError(
                    f"exponent vector {exponents} has length {len(exponents)}, expected {rank}"
                )
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                clean[exponents] = clean.get(exponents, Fraction(0)) + coefficient
                if clean[exponents] == 0:
                    del clean[exponents]
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, rank, terms):
        # internal fast path: terms already normalized except possible zeros
        self = object.__new__(cls)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c != 0})
        return self

    @classmethod
    def zero(cls, rank):
        return cls(rank, {})

    @classmethod
    def constant(cls, rank, value):
        return cls(rank, {(0,) * rank: Fraction(value)})

    @classmethod
    def variable(cls, rank, index):
        """The generator u_{index+1} (0-based index)."""
        if not 0 <= index < rank:
            raise ValueError(f"variable index {index} out of range for rank {rank}")
        exponents = tuple(1 if i == index else 0 for i in range(rank))
        return cls(rank, {exponents: 1})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _check_same_rank(self, other)
        result = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            total = result.get(exponents, Fraction(0)) + coefficient
            if total == 0:
                result.pop(exponents, None)
            else:
                result[exponents] = total
        return Polynomial._raw(self.rank, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _check_same_rank(self, other)
        result = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exponents = tuple(x + y for x, y in zip(ea, eb))
                result[exponents] = result.get(exponents, Fraction(0)) + ca * cb
        return Polynomial._raw(self.rank, result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        exponent = operator.index(exponent)
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.rank, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.rank, other)
        return NotImplemented

    def degree(self):
        """Total polynomial degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def cohomological_degree(self):
        """2 * total degree for a homogeneous polynomial; None if zero."""
        if not self.terms:
            return None
        if not self.is_homogeneous():
            raise ValueError(f"not homogeneous: {self}")
        return 2 * self.degree()

    def constant_coefficient(self):
        return self.terms.get((0,) * self.rank, Fraction(0))

    def substitute(self, direction):
        """Specialize u_i -> direction[i] * u, giving a rank-1 polynomial.

        Ring homomorphism onto Q[u]; `direction` is an integer vector of
        length `rank`.
        """
        direction = tuple(operator.index(x) for x in direction)
        if len(direction) != self.rank:
            raise RankMismatch(
                f"direction has length {len(direction)}, polynomial has rank {self.rank}"
            )
        result = {}
        for exponents, coefficient in self.terms.items():
            scale = coefficient
            for e, x in zip(exponents, direction):
                scale *= Fraction(x) ** e
            if scale == 0:
                continue
            key = (sum(exponents),)
            total = result.get(key, Fraction(0)) + scale
            if total == 0:
                result.pop(key, None)
            else:
                result[key] = total
        return Polynomial._raw(1, result)

    def sorted_terms(self):
        """Terms in descending graded-lex order, as (exponents, coefficient)."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_grlex, reverse=True)]

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exponents, coefficient in self.sorted_terms():
            monomial = "*".join(
                f"u{i + 1}" if e == 1 else f"u{i + 1}^{e}"
                for i, e in enumerate(exponents)
                if e
            )
            magnitude = abs(coefficient)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            pieces.append(("-" if coefficient < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial(rank={self.rank}, {self})"

    @classmethod
    def parse(cls, text, rank):
        """Parse the canonical rendering back into a polynomial.

        Inverse of str() for any polynomial of the given rank; raises
        ValueError on malformed input or variable indices above the rank.
        """
        return _parse_polynomial(text, rank)


_POLY_TOKEN = re.compile(r"\s*(?:(\d+)|u(\d+)|([+\-*/^()]))")


def _parse_polynomial(text, rank):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _POLY_TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ValueError(f"unexpected character {text[pos:].lstrip()[0]!r} in polynomial")
            break
        if match.group(1) is not None:
            tokens.append(("int", int(match.group(1))))
        elif match.group(2) is not None:
            tokens.append(("var", int(match.group(2))))
        else:
            tokens.append((match.group(3), None))
        pos = match.end()

    result = Polynomial.zero(rank)
    i = 0

    def parse_term(i):
        coefficient = Fraction(1)
        exponents = [0] * rank
        expect_factor = True
        saw_factor = False
        while i < len(tokens):
            kind, value = tokens[i]
            if kind == "int":
                coefficient *= value
                i += 1
                if i < len(tokens) and tokens[i][0] == "/":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "int":
                        raise ValueError("expected integer denominator")
                    coefficient /= tokens[i + 1][1]
                    i += 2
            elif kind == "var":
                index = value
                if not 1 <= index <= rank:
                    raise ValueError(f"variable u{index} out of range for rank {rank}")
                power = 1
                i += 1
                if i < len(tokens) and tokens[i][0] == "^":
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != "int":
                        raise ValueError("expected integer exponent after '^'")
                    power = tokens[i + 1][1]
                    i += 2
                exponents[index - 1] += power
            else:
                break
            saw_factor = True
            expect_factor = False
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                expect_factor = True
        if expect_factor or not saw_factor:
            raise ValueError("expected a term")
        return coefficient, tuple(exponents), i

    sign = 1
    if i < len(tokens) and tokens[i][0] == "-":
        sign = -1
        i += 1
    elif i < len(tokens) and tokens[i][0] == "+":
        i += 1
    if not tokens:
        raise ValueError("empty polynomial text")
    while True:
        coefficient, exponents, i = parse_term(i)
        result = result + Polynomial(rank, {exponents: sign * coefficient})
        if i == len(tokens):
            return result
        kind = tokens[i][0]
        if kind == "+":
            sign = 1
        elif kind == "-":
            sign = -1
        else:
            raise ValueError(f"unexpected token {kind!r} in polynomial")
        i += 1


@dataclass(frozen=True)
class LinearForm:
    """Primitive integer linear form a1*u1 + ... + al*ul.

    Canonical representative: coefficients are coprime integers, not all
    zero, and the first nonzero one is positive.  Proportional integer
    vectors therefore normalize to the same form, which makes LinearForm a
    usable multiset key for factored denominators.
    """

    coefficients: tuple

    def __post_init__(self):
        coefficients = tuple(operator.index(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coefficients)
        if not any(coefficients):
            raise ValueError("linear form must be nonzero")
        content = 0
        for c in coefficients:
            content = gcd(content, abs(c))
        first = next(c for c in coefficients if c)
        if content != 1 or first < 0:
            raise ValueError(
                f"{coefficients} is not content-normalized; use LinearForm.normalize"
            )

    @classmethod
    def normalize(cls, vector):
        """Split an arbitrary nonzero integer vector into (form, scalar).

        scalar * form.coefficients == vector, with scalar carrying both the
        content and the sign of the first nonzero entry.
        """
        vector = tuple(operator.index(c) for c in vector)
        if not any(vector):
            raise ValueError("cannot normalize the zero vector")
        content = 0
        for c in vector:
            content = gcd(content, abs(c))
        first = next(c for c in vector if c)
        scalar = content if first > 0 else -content
        return cls(tuple(c // scalar for c in vector)), scalar

    @property
    def rank(self):
        return len(self.coefficients)

    def as_polynomial(self):
        return Polynomial(
            self.rank,
            {
                tuple(1 if j == i else 0 for j in range(self.rank)): c
                for i, c in enumerate(self.coefficients)
                if c
            },
        )

    def pair(self, direction):
        """Integer pairing <form, direction>."""
        direction = tuple(direction)
        if len(direction) != self.rank:
            raise RankMismatch(
                f"direction has length {len(direction)}, form has rank {self.rank}"
            )
        return sum(c * x for c, x in zip(self.coefficients, direction))

    def __str__(self):
        return str(self.as_polynomial())


def linear_divide(p, form):
    """Exact division of `p` by a primitive linear form.

    Returns q with q * form == p when the form divides p, and None
    otherwise (a normal outcome, not an error).  Works by eliminating the
    form's pivot variable: each step rewrites the graded-lex-greatest
    monomial still containing the pivot, so the remainder is pivot-free and
    divisibility holds exactly when that remainder is zero.
    """
    if not isinstance(p, Polynomial):
        raise TypeError(f"expected Polynomial, got {type(p).__name__}")
    if p.rank != form.rank:
        raise RankMismatch(f"polynomial rank {p.rank} vs form rank {form.rank}")
    if not p:
        return p
    pivot = next(i for i, c in enumerate(form.coefficients) if c)
    lead = form.coefficients[pivot]
    remainder = dict(p.terms)
    quotient = {}
    while True:
        candidates = [e for e in remainder if e[pivot] > 0]
        if not candidates:
            break
        top = max(candidates, key=_grlex)
        coefficient = remainder[top] / lead
        q_exponents = tuple(e - 1 if i == pivot else e for i, e in enumerate(top))
        quotient[q_exponents] = quotient.get(q_exponents, Fraction(0)) + coefficient
        for j, fj in enumerate(form.coefficients):
            if not fj:
                continue
            target = tuple(e + 1 if i == j else e for i, e in enumerate(q_exponents))
            total = remainder.get(target, Fraction(0)) - coefficient * fj
            if total == 0:
                remainder.pop(target, None)
            else:
                remainder[target] = total
    if remainder:
        return None
    return Polynomial._raw(p.rank, quotient)


class FactoredRational:
    """Rational function numerator / product of linear-form powers.

    Always stored fully cancelled: no denominator form divides the
    numerator.  The denominator is a multiset of primitive LinearForms with
    positive multiplicities; content and sign scalars extracted during
    normalization belong in the numerator's coefficients.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        if not isinstance(numerator, Polynomial):
            raise TypeError(f"numerator must be a Polynomial, got {type(numerator).__name__}")
        multiset = {}
        items = denominator.items() if isinstance(denominator, dict) else denominator
        for form, multiplicity in items:
            multiplicity = operator.index(multiplicity)
            if multiplicity < 0:
                raise ValueError(f"negative multiplicity for {form}")
            if form.rank != numerator.rank:
                raise RankMismatch(
                    f"form rank {form.rank} vs numerator rank {numerator.rank}"
                )
            if multiplicity:
                multiset[form] = multiset.get(form, 0) + multiplicity
        # full cancellation; linear forms are prime, so per-form greedy
        # division reaches the unique reduced representative in any order
        for form in list(multiset):
            while multiset[form] > 0:
                divided = linear_divide(numerator, form)
                if divided is None:
                    break
                numerator = divided
                multiset[form] -= 1
            if multiset[form] == 0:
                del multiset[form]
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", multiset)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredRational is immutable")

    @classmethod
    def zero(cls, rank):
        return cls(Polynomial.zero(rank))

    @classmethod
    def from_polynomial(cls, p):
        return cls(p)

    @property
    def rank(self):
        return self.numerator.rank

    @property
    def is_polynomial(self):
        return not self.denominator

    def as_polynomial(self):
        """The numerator when the denominator is empty; raises otherwise."""
        if self.denominator:
            raise NotPolynomialError(self)
        return self.numerator

    def __add__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        _check_same_rank(self, other)
        lcm = dict(self.denominator)
        for form, multiplicity in other.denominator.items():
            lcm[form] = max(lcm.get(form, 0), multiplicity)
        left = self.numerator
        right = other.numerator
        for form, multiplicity in lcm.items():
            fp = form.as_polynomial()
            for _ in range(multiplicity - self.denominator.get(form, 0)):
                left = left * fp
            for _ in range(multiplicity - other.denominator.get(form, 0)):
                right = right * fp
        return FactoredRational(left + right, lcm)

    def __neg__(self):
        negated = object.__new__(FactoredRational)
        object.__setattr__(negated, "numerator", -self.numerator)
        object.__setattr__(negated, "denominator", dict(self.denominator))
        return negated

    def __sub__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    __hash__ = None

    def substitute(self, direction):
        """Specialize every variable along an integer direction, u_i -> xi_i * u.

        Each denominator form must pair nonzero with the direction; the
        resulting rank-1 fraction has denominator a power of u.
        """
        numerator = self.numerator.substitute(direction)
        scale = Fraction(1)
        total = 0
        for form, multiplicity in self.denominator.items():
            value = form.pair(direction)
            if value == 0:
                raise ZeroDivisionError(
                    f"direction {tuple(direction)} annihilates denominator form {form}"
                )
            scale *= Fraction(value) ** multiplicity
            total += multiplicity
        den = {LinearForm((1,)): total} if total else {}
        return FactoredRational(numerator * (1 / scale), den)

    def sorted_denominator(self):
        return sorted(self.denominator.items(), key=lambda kv: kv[0].coefficients)

    def __str__(self):
        if not self.denominator:
            return str(self.numerator)
        factors = "*".join(
            f"({form})" if multiplicity == 1 else f"({form})^{multiplicity}"
            for form, multiplicity in self.sorted_denominator()
        )
        return f"({self.numerator}) / {factors}"

    def __repr__(self):
        return f"FactoredRational({self})"
