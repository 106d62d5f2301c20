"""Exception hierarchy shared by every module.

All library errors derive from :class:`FormdiscError` so callers can catch
one type at the boundary.  Precondition violations and impossible inputs get
their own classes because the CLI maps them to distinct exit codes and the
test suite asserts on the specific class raised.
"""

from __future__ import annotations

import time


class FormdiscError(Exception):
    """Base class for all errors raised by this package."""


# --- polynomial arithmetic ------------------------------------------------

class VariableMismatch(FormdiscError):
    """Binary operation on polynomials with different ambient variables."""


class NotDivisible(FormdiscError):
    """Exact division requested but the remainder is nonzero."""


class UnknownVariable(FormdiscError):
    """A variable name is not declared in the ambient variable list."""


# --- linear algebra / interpolation ----------------------------------------

class NonSquare(FormdiscError):
    """Determinant of a non-square matrix."""


class DuplicateAbscissa(FormdiscError):
    """Interpolation samples share an x-value."""


class InconsistentSamples(FormdiscError):
    """Extra interpolation samples do not lie on the fitted polynomial."""


# --- resultants -------------------------------------------------------------

class DegreeMismatch(FormdiscError):
    """Declared degree below the actual degree of a polynomial."""


class NotHomogeneous(FormdiscError):
    """A form is not homogeneous of its declared degree."""


class PerturbationFailure(FormdiscError):
    """The symbolic perturbation of a degenerate resultant failed; the
    generic forms must be re-randomized."""


class ZeroDiscriminant(FormdiscError):
    """An operation requires a nonzero discriminant."""


# --- singularity theory -----------------------------------------------------

class NotSingular(FormdiscError):
    """Some partial derivative does not vanish at the given point."""


class NotIsolated(FormdiscError):
    """Jacobian colength did not stabilize below the cap; the singular
    point is not isolated."""


class NotZeroDimensional(FormdiscError):
    """The ideal has a positive-dimensional zero locus."""


class NonReduced(FormdiscError):
    """The curve has a repeated component (not squarefree)."""


# --- degeneration harness ----------------------------------------------------

class IdenticallySingular(FormdiscError):
    """Every fiber of the family is singular (discriminant vanishes
    identically)."""


class NotIsolatedTotalSpace(FormdiscError):
    """The total space of the family has non-isolated singularities."""


class NonRationalSingularity(FormdiscError):
    """A required singular point has no rational coordinates."""


class NonReducedSpecialFiber(FormdiscError):
    """The special fiber is non-reduced, so the plane-curve Euler
    characteristic identity does not apply."""


# --- elliptic / Tate ----------------------------------------------------------

class NonIntegralModel(FormdiscError):
    """A Weierstrass coefficient has negative valuation."""


class SingularGenericFiber(FormdiscError):
    """The Weierstrass equation has discriminant zero."""


# --- verification -------------------------------------------------------------

class AssertionFailure(FormdiscError):
    """A verified identity failed; carries both sides for diagnosis."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


# --- parsing -------------------------------------------------------------------

class ParseError(FormdiscError):
    """Position-annotated parse error."""

    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"line {line}, column {column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


# --- cancellation ----------------------------------------------------------------

class Cancelled(FormdiscError):
    """A long-running computation exceeded its caller-supplied deadline."""


def check_deadline(deadline: float | None) -> None:
    """Raise :class:`Cancelled` when ``time.monotonic()`` is past ``deadline``.

    ``deadline`` is an absolute monotonic timestamp; ``None`` disables the
    check.  Long elimination loops call this once per pivot.
    """
    if deadline is not None and time.monotonic() > deadline:
        raise Cancelled(f"deadline exceeded at {time.monotonic():.3f}s")
