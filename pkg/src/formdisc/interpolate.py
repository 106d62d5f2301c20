"""Exact univariate interpolation on deterministic abscissae.

Sampling points are 0, 1, -1, 2, -2, ... so runs are reproducible and the
numbers stay small.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa, InconsistentSamples
from .poly import MultiPoly


def interpolation_abscissae(count: int) -> list[Fraction]:
    """First ``count`` values of the sequence 0, 1, -1, 2, -2, ..."""
    out: list[Fraction] = []
    k = 0
    while len(out) < count:
        if k == 0:
            out.append(Fraction(0))
        else:
            out.append(Fraction(k))
            if len(out) < count:
                out.append(Fraction(-k))
        k += 1
    return out


def lagrange_interpolate(samples: Sequence[tuple[Fraction | int, Fraction | int]],
                         degree_bound: int,
                         variable: str = "t") -> MultiPoly:
    """The unique polynomial of degree <= ``degree_bound`` through the samples.

    Needs at least ``degree_bound + 1`` samples with pairwise distinct
    abscissae.  Extra samples are checked against the fit and raise
    :class:`InconsistentSamples` on mismatch.  Built by Newton divided
    differences over exact rationals.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    seen = set()
    for x, _ in pts:
        if x in seen:
            raise DuplicateAbscissa(f"abscissa {x} repeated")
        seen.add(x)
    need = degree_bound + 1
    if len(pts) < need:
        raise InconsistentSamples(
            f"need {need} samples for degree bound {degree_bound}, "
            f"got {len(pts)}")
    base, extra = pts[:need], pts[need:]

    # Newton divided differences on the base points
    xs = [x for x, _ in base]
    coeffs = [y for _, y in base]
    for level in range(1, need):
        for i in range(need - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])

    t = MultiPoly.variable((variable,), variable)
    poly = MultiPoly.constant((variable,), coeffs[-1])
    for i in reversed(range(need - 1)):
        poly = poly * (t - xs[i]) + coeffs[i]

    for x, y in extra:
        if poly.evaluate({variable: x}) != y:
            raise InconsistentSamples(
                f"sample ({x}, {y}) is off the degree-{degree_bound} fit")
    return poly


def evaluate_univariate(poly: MultiPoly, value: Fraction | int) -> Fraction:
    name = poly.variables[0] if poly.variables else "_"
    if not poly.variables:
        return poly.constant_value()
    return poly.evaluate({name: value})
