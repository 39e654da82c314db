"""Explicit differentials of D_i(phi*) over the rationals at a random
    point, with exact checks of d o d = 0 and of the generic-point rank
    conditions. The rank conditions are necessary for acyclicity, not
    sufficient.
"""
from __future__ import annotations
from .errors import tert, vert
from .graded import MorphismSpec
from .interfaces import MatrixChainProtocol
from .linalg import blank, composes_to_zero, determinant, exact_rank, rational, rational_matrix
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from sympy import ImmutableMatrix
from typing import Sequence
import json
import logging
import random


logger = logging.getLogger(__name__)

MAX_REDRAWS = 64


@dataclass(frozen=True)
class SpecializedMatrix:
    """phi* evaluated at a rational point: entries[r][j] is the
        coefficient of f_r* in phi*(g_j*), an entry of degree a_j - b_r.
    """
    entries: tuple[tuple[Fraction, ...], ...]
    seed: int
    point: tuple[Fraction, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    redraws: int = 0

    @property
    def t(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column_minor(self, columns: Sequence[int]) -> Fraction:
        """Determinant of the t x t submatrix on the given columns."""
        return determinant([[row[j] for j in columns] for row in self.entries])

    def rank(self) -> int:
        return exact_rank(rational_matrix([list(row) for row in self.entries]))


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(nvars), degree))

def _evaluate_form(rng: random.Random, point: Sequence[Fraction], degree: int) -> Fraction:
    value = Fraction(0)
    for monomial in _monomials(len(point), degree):
        coefficient = rng.choice((-1, 1)) * rng.randint(1, 5)
        term = Fraction(coefficient)
        for v in monomial:
            term *= point[v]
        value += term
    return value

def random_specialization(spec: MorphismSpec, seed: int) -> SpecializedMatrix:
    """Draw a generic homogeneous matrix with small nonzero integer
        coefficients and evaluate it at a random nonzero rational point,
        all from random.Random(seed). Draws with rank below t are
        discarded and redrawn from the same stream.
    """
    tert(isinstance(spec, MorphismSpec), 'spec must be MorphismSpec')
    tert(type(seed) is int, 'seed must be int')
    spec.require_minimal()
    rng = random.Random(seed)
    t, g = spec.t, spec.rank_G
    for attempt in range(MAX_REDRAWS):
        point = tuple(
            Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 4))
            for _ in range(spec.nvars)
        )
        entries = tuple(
            tuple(_evaluate_form(rng, point, spec.a[j] - spec.b[r]) for j in range(g))
            for r in range(t)
        )
        sm = SpecializedMatrix(entries, seed, point, spec.a, spec.b, attempt)
        if sm.rank() == t:
            if attempt:
                logger.debug('seed %d: redrew %d rank-deficient matrices', seed, attempt)
            return sm
    vert(False, f'no full-rank specialization found for seed {seed}')


@dataclass(frozen=True)
class RationalMatrixChain:
    """Differentials of an explicit complex: matrices[k-1] maps
        position k to position k-1, dims[k] is the rank of position k
        and basis_tags[k] names its basis elements in order.
    """
    matrices: tuple[ImmutableMatrix, ...]
    dims: tuple[int, ...]
    basis_tags: tuple[tuple[str, ...], ...] = field(default=())
    spec: MorphismSpec|None = None
    i: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        vert(len(self.matrices) == len(self.dims) - 1,
            'a chain needs one matrix per pair of adjacent positions')
        matrices = tuple(
            rational_matrix(d, self.dims[k])
            for k, d in enumerate(self.matrices, start=1)
        )
        for k, d in enumerate(matrices, start=1):
            vert(d.shape == (self.dims[k - 1], self.dims[k]),
                f'd_{k} is {d.rows}x{d.cols}, expected {self.dims[k - 1]}x{self.dims[k]}')
        object.__setattr__(self, 'matrices', matrices)

    def differential(self, k: int) -> ImmutableMatrix:
        return self.matrices[k - 1]

    def with_flipped_sign(self, k: int, row: int, col: int) -> RationalMatrixChain:
        """Copy of the chain with one entry of d_k negated."""
        d = self.matrices[k - 1].as_mutable()
        d[row, col] = -d[row, col]
        matrices = list(self.matrices)
        matrices[k - 1] = d.as_immutable()
        return replace(self, matrices=tuple(matrices))


def _sign_of_shuffle(T: Sequence[int], S: Sequence[int]) -> int:
    """Sign of the permutation taking S to (T, S minus T)."""
    inversions = sum(S.index(x) - n for n, x in enumerate(T))
    return -1 if inversions % 2 else 1

def _basis(spec: MorphismSpec, i: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    t, g = spec.t, spec.rank_G
    if k <= i:
        size, sym = k, i - k
    else:
        size, sym = t + k - 1, k - i - 1
    if size > g:
        return []
    return [
        (S, alpha)
        for S in combinations(range(g), size)
        for alpha in combinations_with_replacement(range(t), sym)
    ]

def _tag(spec: MorphismSpec, i: int, k: int, element: tuple) -> str:
    S, alpha = element
    wedge = 'e' + ''.join(str(j) for j in S) if S else '1'
    if k <= i:
        sym = 'x' + ''.join(str(r) for r in alpha) if alpha else '1'
    else:
        sym = 'y' + ''.join(str(r) for r in alpha) if alpha else '1'
    return f'{wedge}⊗{sym}'

def _add_exponent(alpha: tuple[int, ...], r: int) -> tuple[int, ...]:
    return tuple(sorted(alpha + (r,)))

def _remove_exponent(beta: tuple[int, ...], r: int) -> tuple[int, ...]:
    beta = list(beta)
    beta.remove(r)
    return tuple(beta)

def build_d_complex_matrices(spec: MorphismSpec, i: int,
                             sm: SpecializedMatrix) -> RationalMatrixChain:
    """The differentials of D_i(phi*) at the point sm. The Koszul strand
        sends e_S (x) x^alpha to the sum over j in S of
        (-1)^pos(j) e_(S-j) (x) phi*(g_j*) x^alpha; the dual strand
        contracts e_S (x) y^beta against the same columns; the splice
        sends e_S to the sum over t-subsets T of S of
        sign(T; S) det(A_T) e_(S-T).
    """
    tert(isinstance(spec, MorphismSpec), 'spec must be MorphismSpec')
    tert(isinstance(sm, SpecializedMatrix), 'sm must be SpecializedMatrix')
    tert(type(i) is int, 'i must be int')
    vert(-1 <= i <= spec.c, f'i must be in [-1, {spec.c}], got {i}')
    vert(sm.t == spec.t and sm.ncols == spec.rank_G,
        f'specialized matrix is {sm.t}x{sm.ncols}, expected {spec.t}x{spec.rank_G}')
    A = sm.entries
    t, c = spec.t, spec.c
    bases = [_basis(spec, i, k) for k in range(c + 1)]
    index = [{element: n for n, element in enumerate(basis)} for basis in bases]
    minors: dict[tuple[int, ...], Fraction] = {}

    matrices = []
    for k in range(1, c + 1):
        d = blank(len(bases[k - 1]), len(bases[k]))
        target = index[k - 1]
        for col, (S, alpha) in enumerate(bases[k]):
            if k <= i:
                for pos, j in enumerate(S):
                    rest = S[:pos] + S[pos + 1:]
                    sign = -1 if pos % 2 else 1
                    for r in range(t):
                        if A[r][j]:
                            d[target[(rest, _add_exponent(alpha, r))], col] += rational(sign * A[r][j])
            elif k == i + 1:
                for T in combinations(S, t):
                    if T not in minors:
                        minors[T] = sm.column_minor(T)
                    if not minors[T]:
                        continue
                    rest = tuple(x for x in S if x not in T)
                    d[target[(rest, ())], col] += rational(_sign_of_shuffle(T, S) * minors[T])
            else:
                for pos, j in enumerate(S):
                    rest = S[:pos] + S[pos + 1:]
                    sign = -1 if pos % 2 else 1
                    for r in set(alpha):
                        if A[r][j]:
                            d[target[(rest, _remove_exponent(alpha, r))], col] += rational(sign * A[r][j])
        matrices.append(d.as_immutable())
        logger.info('D_%d: d_%d is %dx%d', i, k, len(bases[k - 1]), len(bases[k]))

    tags = tuple(
        tuple(_tag(spec, i, k, element) for element in basis)
        for k, basis in enumerate(bases)
    )
    return RationalMatrixChain(
        tuple(matrices),
        tuple(len(basis) for basis in bases),
        tags,
        spec,
        i,
        sm.seed,
    )


@dataclass(frozen=True)
class AcyclicityReport:
    """Outcome of the exact checks on one chain."""
    spec: MorphismSpec|None
    i: int
    seed: int
    dd_zero: bool
    ranks: tuple[int, ...]
    rank_conditions: bool
    h0_corank: int
    dims: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.dd_zero and self.rank_conditions

    def to_json(self) -> str:
        spec = None
        if self.spec is not None:
            spec = {
                't': self.spec.t,
                'c': self.spec.c,
                'a': list(self.spec.a),
                'b': list(self.spec.b),
                'nvars': self.spec.nvars,
            }
        return json.dumps({
            'spec': spec,
            'i': self.i,
            'seed': self.seed,
            'dd_zero': self.dd_zero,
            'ranks': list(self.ranks),
            'rank_conditions': self.rank_conditions,
            'h0_corank': self.h0_corank,
            'dims': list(self.dims),
        }) + '\n'


def verify_acyclicity(chain: MatrixChainProtocol) -> AcyclicityReport:
    """Check d_k d_(k+1) = 0 exactly, compute the rank r_k of every
        differential and test r_k + r_(k+1) = dim_k for k >= 1.
    """
    tert(isinstance(chain, MatrixChainProtocol), 'chain must implement MatrixChainProtocol')
    length = len(chain.matrices)
    dd_zero = all(
        composes_to_zero(chain.differential(k), chain.differential(k + 1))
        for k in range(1, length)
    )
    ranks = tuple(exact_rank(chain.differential(k)) for k in range(1, length + 1))
    padded = ranks + (0,)
    rank_conditions = all(
        padded[k - 1] + padded[k] == chain.dims[k]
        for k in range(1, length + 1)
    )
    h0_corank = chain.dims[0] - (ranks[0] if ranks else 0)
    report = AcyclicityReport(
        getattr(chain, 'spec', None), getattr(chain, 'i', 0), getattr(chain, 'seed', 0),
        dd_zero, ranks, rank_conditions, h0_corank, tuple(chain.dims),
    )
    logger.info('D_%d seed %d: ranks %s, dd_zero=%s, rank conditions=%s',
        report.i, report.seed, list(ranks), dd_zero, rank_conditions)
    return report
