"""Discrete valuations: p-adic on rationals, order of vanishing at t = 0.

``ord_v(0)`` is positive infinity (``math.inf``), never an integer, so the
zero case cannot silently enter integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormdiscError
from .poly import MultiPoly

INFINITY = math.inf


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ValuationContext:
    """Which discrete valuation ring we are working over.

    ``prime`` kind: the integers localized at a prime p.
    ``parameter`` kind: rational polynomials localized at (t), i.e. order of
    vanishing at t = 0.
    """

    kind: str
    p: int | None = None
    t: str | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if self.p is None or self.p < 2 or not is_prime(self.p):
                raise FormdiscError(f"{self.p!r} is not a prime >= 2")
        elif self.kind == "parameter":
            if not self.t:
                raise FormdiscError("parameter kind needs a variable name")
        else:
            raise FormdiscError(f"unknown valuation kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "ValuationContext":
        return cls(kind="prime", p=p)

    @classmethod
    def parameter(cls, name: str = "t") -> "ValuationContext":
        return cls(kind="parameter", t=name)

    @property
    def residue_characteristic(self) -> int:
        return self.p if self.kind == "prime" else 0


def _ord_int(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("ord of 0 handled by caller")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_v(x: Fraction | int | MultiPoly, ctx: ValuationContext) -> int | float:
    """Valuation of x: p-adic for prime kind, vanishing order at t = 0 for
    parameter kind.  Returns ``math.inf`` for x = 0."""
    if ctx.kind == "prime":
        if isinstance(x, MultiPoly):
            if not x.is_constant() and not x.is_zero():
                raise FormdiscError(
                    "p-adic valuation applies to rational numbers")
            x = x.constant_value()
        x = Fraction(x)
        if x == 0:
            return INFINITY
        return _ord_int(x.numerator, ctx.p) - _ord_int(x.denominator, ctx.p)
    # parameter kind
    if isinstance(x, (int, Fraction)):
        return INFINITY if x == 0 else 0
    if x.is_zero():
        return INFINITY
    idx = x.variables.index(ctx.t) if ctx.t in x.variables else None
    if idx is None:
        raise FormdiscError(f"polynomial does not involve {ctx.t!r}")
    # valuation at (t) is only defined for polynomials in t alone
    for expo in x.terms:
        for i, e in enumerate(expo):
            if e and i != idx:
                raise FormdiscError(
                    f"ord at ({ctx.t}) needs a univariate polynomial, got "
                    f"one involving {x.variables[i]!r}")
    return min(expo[idx] for expo in x.terms)
