"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients, together with an ordered tuple of variable names.  Exponent
tuple element ``i`` is the degree of variable ``variables[i]`` in that
monomial:

    x^2*y + 3  over (x, y)  ->  {(2, 1): Fraction(1), (0, 0): Fraction(3)}

The zero polynomial stores no terms.  Zero coefficients are never stored, so
structural equality of the term maps is semantic equality.  All arithmetic is
exact; nothing in this module ever rounds.

The degree of the zero polynomial is ``None`` (a real sentinel, never an
integer), so accidental arithmetic on it fails loudly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, UnknownVariable, VariableMismatch

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


def _frac(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponents, b: Exponents) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponents of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Exponents) -> int:
    return sum(a)


class MultiPoly:
    """Immutable-by-convention sparse polynomial over the rationals."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str],
                 terms: Mapping[Exponents, Scalar] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        if terms:
            width = len(self.variables)
            for expo, coeff in terms.items():
                expo = tuple(expo)
                if len(expo) != width:
                    raise ValueError(
                        f"exponent tuple {expo} does not match "
                        f"{width} variables")
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                c = _frac(coeff)
                if c != 0:
                    clean[expo] = c
        self.terms: dict[Exponents, Fraction] = clean

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: Scalar) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _frac(value)})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(f"variable {name!r} not among {variables}")
        expo = [0] * len(variables)
        expo[variables.index(name)] = 1
        return cls(variables, {tuple(expo): Fraction(1)})

    # --- predicates / inspection -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_degree(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (zero included)."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_degree(e) for e in self.terms)

    def degree_in(self, name: str) -> int | None:
        idx = self._index(name)
        if not self.terms:
            return None
        return max(e[idx] for e in self.terms)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(
                f"variable {name!r} not among {self.variables}") from None

    def _check_same_ring(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise VariableMismatch(
                f"operands live over {self.variables} vs {other.variables}")

    # --- ring operations -----------------------------------------------------

    def __add__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        other = self._coerce(other)
        self._check_same_ring(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = terms.get(expo, Fraction(0)) + coeff
            if acc == 0:
                terms.pop(expo, None)
            else:
                terms[expo] = acc
        out = MultiPoly.__new__(MultiPoly)
        out.variables = self.variables
        out.terms = terms
        return out

    def __radd__(self, other: Scalar) -> "MultiPoly":
        return self + other

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        out.variables = self.variables
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if c == 0:
                return MultiPoly.zero(self.variables)
            out = MultiPoly.__new__(MultiPoly)
            out.variables = self.variables
            out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        self._check_same_ring(other)
        acc: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                expo = mono_mul(ea, eb)
                val = acc.get(expo, Fraction(0)) + ca * cb
                if val == 0:
                    acc.pop(expo, None)
                else:
                    acc[expo] = val
        out = MultiPoly.__new__(MultiPoly)
        out.variables = self.variables
        out.terms = acc
        return out

    def __rmul__(self, other: Scalar) -> "MultiPoly":
        return self * other

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _coerce(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(self.variables, other)

    # --- exact division -------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly | Scalar") -> "MultiPoly":
        """Quotient self/divisor when the division is exact.

        Raises :class:`NotDivisible` when the remainder is nonzero.  Uses
        single-divisor division with respect to lex order; the remainder is
        zero exactly when the divisor divides self in the polynomial ring.
        """
        if isinstance(divisor, (int, Fraction)):
            c = _frac(divisor)
            if c == 0:
                raise ZeroDivisionError("division by the zero polynomial")
            return self * (1 / c)
        self._check_same_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.variables)
        lead_e = max(divisor.terms)  # lex-leading exponent
        lead_c = divisor.terms[lead_e]
        quotient: dict[Exponents, Fraction] = {}
        rem = dict(self.terms)
        while rem:
            expo = max(rem)
            if not mono_divides(lead_e, expo):
                raise NotDivisible(
                    "remainder has a term not divisible by the leading "
                    "monomial of the divisor")
            qe = mono_div(expo, lead_e)
            qc = rem[expo] / lead_c
            quotient[qe] = quotient.get(qe, Fraction(0)) + qc
            for de, dc in divisor.terms.items():
                te = mono_mul(qe, de)
                val = rem.get(te, Fraction(0)) - qc * dc
                if val == 0:
                    rem.pop(te, None)
                else:
                    rem[te] = val
        return MultiPoly(self.variables, quotient)

    # --- calculus / substitution -----------------------------------------------

    def partial_derivative(self, name: str) -> "MultiPoly":
        idx = self._index(name)
        terms: dict[Exponents, Fraction] = {}
        for expo, coeff in self.terms.items():
            k = expo[idx]
            if k == 0:
                continue
            new = list(expo)
            new[idx] = k - 1
            terms[tuple(new)] = coeff * k
        return MultiPoly(self.variables, terms)

    def substitute(self, assignment: Mapping[str, "MultiPoly | Scalar"]
                   ) -> "MultiPoly":
        """Compose with ``assignment``; unmentioned variables stay themselves.

        Replacement values may be scalars or polynomials over the same
        ambient variables.  The result is exact.
        """
        for name in assignment:
            if name not in self.variables:
                raise UnknownVariable(
                    f"variable {name!r} not among {self.variables}")
        replacements: list[MultiPoly] = []
        for name in self.variables:
            if name in assignment:
                value = assignment[name]
                if isinstance(value, MultiPoly):
                    self._check_same_ring(value)
                    replacements.append(value)
                else:
                    replacements.append(
                        MultiPoly.constant(self.variables, value))
            else:
                replacements.append(MultiPoly.variable(self.variables, name))
        # cache powers of each replacement as needed
        powers: list[dict[int, MultiPoly]] = [
            {0: MultiPoly.constant(self.variables, 1), 1: rep}
            for rep in replacements]

        def power(i: int, k: int) -> MultiPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * cache[1]
            return cache[k]

        total = MultiPoly.zero(self.variables)
        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(self.variables, coeff)
            for i, k in enumerate(expo):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a full assignment of scalar values."""
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise UnknownVariable(f"no value given for {missing}")
        values = [_frac(point[v]) for v in self.variables]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            acc = coeff
            for val, k in zip(values, expo):
                if k:
                    acc *= val ** k
            total += acc
        return total

    # --- restriction to / extension of the ambient ring --------------------------

    def restrict(self, variables: Iterable[str]) -> "MultiPoly":
        """Rewrite over a sub-tuple of variables the polynomial does not
        actually use beyond."""
        variables = tuple(variables)
        indices = [self._index(v) for v in variables]
        keep = set(indices)
        for expo in self.terms:
            for i, e in enumerate(expo):
                if e and i not in keep:
                    raise UnknownVariable(
                        f"polynomial uses {self.variables[i]!r}, outside "
                        f"{variables}")
        terms = {tuple(expo[i] for i in indices): c
                 for expo, c in self.terms.items()}
        return MultiPoly(variables, terms)

    def extend(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-express over a larger variable tuple containing the current one."""
        variables = tuple(variables)
        positions = []
        for v in self.variables:
            if v not in variables:
                raise UnknownVariable(f"{v!r} missing from {variables}")
            positions.append(variables.index(v))
        terms: dict[Exponents, Fraction] = {}
        for expo, coeff in self.terms.items():
            new = [0] * len(variables)
            for pos, e in zip(positions, expo):
                new[pos] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Collect coefficients with respect to one variable.

        Returns a map exponent-of-``name`` -> polynomial in the same ambient
        ring with ``name`` eliminated from each value.
        """
        idx = self._index(name)
        buckets: dict[int, dict[Exponents, Fraction]] = {}
        for expo, coeff in self.terms.items():
            k = expo[idx]
            reduced = list(expo)
            reduced[idx] = 0
            buckets.setdefault(k, {})[tuple(reduced)] = coeff
        return {k: MultiPoly(self.variables, terms)
                for k, terms in buckets.items()}

    def content(self) -> Fraction:
        """GCD of the coefficients (0 for the zero polynomial)."""
        from math import gcd
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # --- dunder plumbing -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from .parsing import poly_to_string
        return f"MultiPoly({poly_to_string(self)!r}, vars={self.variables})"

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending degree-then-lex order (deterministic output)."""
        return sorted(self.terms.items(),
                      key=lambda item: (mono_degree(item[0]), item[0]),
                      reverse=True)
