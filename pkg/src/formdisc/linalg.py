"""Exact linear algebra: fraction-free determinants and rank.

Determinants use Bareiss (fraction-free) elimination.  Rational matrices are
scaled row-by-row to integers first, so all intermediate arithmetic is on
Python ints; matrices of univariate (or multivariate) polynomials run the
same recurrence with exact polynomial division, which Bareiss guarantees.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import Cancelled, NonSquare, check_deadline
from .poly import MultiPoly

Entry = Fraction | int | MultiPoly
Matrix = list[list[Entry]]


def _clear_row_denominators(row: list[Entry]) -> tuple[list, int]:
    """Scale a row by the lcm of its denominators; return (row, multiplier)."""
    dens = []
    for x in row:
        if isinstance(x, Fraction):
            dens.append(x.denominator)
        elif isinstance(x, MultiPoly):
            for c in x.terms.values():
                dens.append(c.denominator)
    mult = lcm(*dens) if dens else 1
    if mult == 1:
        out = [x.numerator if isinstance(x, Fraction) else x for x in row]
        return out, 1
    out = []
    for x in row:
        if isinstance(x, Fraction):
            y = x * mult
            assert y.denominator == 1
            out.append(y.numerator)
        elif isinstance(x, MultiPoly):
            out.append(x * mult)
        else:
            out.append(x * mult)
    return out, mult


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        return a.exact_div(b)
    if isinstance(b, MultiPoly):
        if b.is_constant():
            return Fraction(a) / b.constant_value()
        raise TypeError("scalar divided by non-constant polynomial")
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"non-exact division {a}/{b} in Bareiss")
        return q
    return Fraction(a) / Fraction(b)


def bareiss_determinant(matrix: Matrix, deadline: float | None = None):
    """Exact determinant of a square matrix of rationals or polynomials.

    Fraction-free elimination: every interior division is exact.  Rational
    input comes back as a ``Fraction``; polynomial input as a ``MultiPoly``.
    Raises :class:`NonSquare` for ragged or non-square input and
    :class:`Cancelled` past the optional deadline.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NonSquare(f"matrix is not square ({n} rows)")
    if n == 0:
        return Fraction(1)

    polynomial = any(isinstance(x, MultiPoly) and not x.is_constant()
                     for row in matrix for x in row)
    if polynomial:
        variables = next(x.variables for row in matrix for x in row
                         if isinstance(x, MultiPoly))

        def norm(x):
            if isinstance(x, MultiPoly):
                return x
            return MultiPoly.constant(variables, x)
        work0 = [[norm(x) for x in row] for row in matrix]
    else:
        def unfrac(x):
            if isinstance(x, MultiPoly):
                return x.constant_value()
            return Fraction(x)
        work0 = [[unfrac(x) for x in row] for row in matrix]

    scale = Fraction(1)
    work = []
    for row in work0:
        cleared, mult = _clear_row_denominators(row)
        work.append(cleared)
        scale *= mult

    sign = 1
    prev = 1
    for k in range(n - 1):
        check_deadline(deadline)
        if _is_zero(work[k][k]):
            pivot_row = next((i for i in range(k + 1, n)
                              if not _is_zero(work[i][k])), None)
            if pivot_row is None:
                return (MultiPoly.zero(variables) if polynomial
                        else Fraction(0))
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            check_deadline(deadline)
            left = work[i][k]
            for j in range(k + 1, n):
                work[i][j] = _exact_div(
                    work[i][j] * pivot - left * work[k][j], prev)
            work[i][k] = 0 if not polynomial else MultiPoly.zero(variables)
        prev = pivot

    det = work[n - 1][n - 1]
    if polynomial:
        result = det * (Fraction(sign) / scale)
        return result
    return Fraction(sign) * Fraction(det) / scale


def cofactor_determinant(matrix: Matrix):
    """Naive cofactor expansion.  Exponential; for cross-checks only."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise NonSquare("matrix is not square")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if _is_zero(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        piece = entry * cofactor_determinant(minor)
        if j % 2:
            piece = -piece
        total = piece if total is None else total + piece
    if total is None:
        return Fraction(0)
    return total


def kernel_rank(matrix: list[list[Fraction | int]],
                modulus: int | None = None) -> tuple[int, int]:
    """Exact (rank, nullity) by Gaussian elimination.

    ``modulus`` switches the field from the rationals to the prime field
    F_modulus.  The empty matrix has rank 0.
    """
    rows = len(matrix)
    if rows == 0:
        return 0, 0
    cols = len(matrix[0])
    if any(len(row) != cols for row in matrix):
        raise NonSquare("ragged matrix")
    if modulus is not None:
        work = [[int(x) % modulus for x in row] for row in matrix]
    else:
        work = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    for col in range(cols):
        pivot_row = next((i for i in range(rank, rows)
                          if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        inv = (pow(pivot, -1, modulus) if modulus is not None
               else 1 / pivot)
        if modulus is not None:
            work[rank] = [(x * inv) % modulus for x in work[rank]]
        else:
            work[rank] = [x * inv for x in work[rank]]
        for i in range(rows):
            if i != rank and work[i][col] != 0:
                factor = work[i][col]
                if modulus is not None:
                    work[i] = [(a - factor * b) % modulus
                               for a, b in zip(work[i], work[rank])]
                else:
                    work[i] = [a - factor * b
                               for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == rows:
            break
    return rank, cols - rank
