"""Exact rational matrices on sympy. Entries are sympy Rationals, so no
    floating point enters any rank, product or determinant.
"""
from __future__ import annotations
from .errors import tert, vert
from fractions import Fraction
from sympy import ImmutableMatrix, Matrix, MatrixBase, Rational, zeros
from typing import Sequence


def rational(x: int|Fraction|Rational) -> Rational:
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return Rational(x)

def to_fraction(x: Rational) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))

def rational_matrix(rows: Sequence[Sequence[int|Fraction|Rational]]|MatrixBase,
                    ncols: int = 0) -> ImmutableMatrix:
    """Immutable sympy matrix of Rationals. An empty list of rows gives
        a 0 x ncols matrix.
    """
    if isinstance(rows, MatrixBase):
        return rows.as_immutable()
    tert(isinstance(rows, (list, tuple)), 'rows must be a list, tuple or sympy matrix')
    if not rows:
        return zeros(0, ncols).as_immutable()
    width = len(rows[0])
    vert(all(len(row) == width for row in rows), 'rows must have equal length')
    return ImmutableMatrix(len(rows), width, [rational(x) for row in rows for x in row])

def blank(nrows: int, ncols: int) -> Matrix:
    """Mutable zero matrix to be filled entry by entry."""
    return zeros(nrows, ncols)

def exact_rank(matrix: MatrixBase) -> int:
    if 0 in matrix.shape:
        return 0
    return matrix.rank()

def composes_to_zero(left: MatrixBase, right: MatrixBase) -> bool:
    vert(left.shape[1] == right.shape[0],
        f'cannot compose {left.shape[0]}x{left.shape[1]} with {right.shape[0]}x{right.shape[1]}')
    return all(x == 0 for x in left * right)

def determinant(rows: Sequence[Sequence[int|Fraction|Rational]]|MatrixBase) -> Fraction:
    """Determinant of a square matrix by fraction-free Bareiss
        elimination.
    """
    m = rational_matrix(rows)
    vert(m.rows == m.cols, 'matrix must be square')
    if m.rows == 0:
        return Fraction(1)
    return to_fraction(m.det(method='bareiss'))
