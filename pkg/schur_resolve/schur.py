"""Pieri decompositions, semistandard tableaux, Schur polynomial
    evaluation and graded generator degrees of Schur modules.
"""
from __future__ import annotations
from .errors import tert, tressa, vert
from .graded import GradedFreeModule
from .linalg import determinant
from .partitions import Partition, _as_partition, conjugate, schur_rank
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence
import logging


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PieriExpansion:
    """The multiplicity-free list of partitions J in a Pieri
        decomposition, all padded to ambient_rank slots.
    """
    terms: tuple[Partition, ...] = field(default=())
    ambient_rank: int = 0

    def ranks(self) -> list[int]:
        return [schur_rank(J, self.ambient_rank) for J in self.terms]

    def total_rank(self) -> int:
        return sum(self.ranks())

    def __contains__(self, J: Partition) -> bool:
        return _as_partition(J) in self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.terms)


def _padded_input(I: Partition, r: int) -> tuple[int, ...]:
    I = _as_partition(I)
    tert(type(r) is int, 'r must be int')
    vert(r >= 1, 'r must be positive')
    vert(I.length <= r, f'{I} does not fit in {r} slots')
    return I.padded(r).parts

def pieri_wedge(I: Partition, nboxes: int, r: int) -> PieriExpansion:
    """Decompose Sigma^I E (x) wedge^nboxes E for E of rank r: add
        nboxes boxes to I, no two in the same row.
    """
    tert(type(nboxes) is int, 'nboxes must be int')
    vert(0 <= nboxes <= r, f'nboxes must be in [0, {r}], got {nboxes}')
    parts = _padded_input(I, r)
    terms = []
    for rows in combinations(range(r), nboxes):
        J = list(parts)
        for v in rows:
            J[v] += 1
        if all(J[k] <= J[k+1] for k in range(r - 1)):
            terms.append(Partition(tuple(J)))
    return PieriExpansion(tuple(sorted(terms, key=lambda p: p.parts)), r)

def pieri_sym(I: Partition, nboxes: int, r: int) -> PieriExpansion:
    """Decompose Sigma^I E (x) S_nboxes E for E of rank r: add a
        horizontal strip of nboxes boxes to I.
    """
    tert(type(nboxes) is int, 'nboxes must be int')
    vert(nboxes >= 0, f'nboxes must be nonnegative, got {nboxes}')
    parts = _padded_input(I, r)
    terms = []

    def extend(v: int, chosen: list[int], left: int) -> None:
        if v == r - 1:
            terms.append(Partition(tuple(chosen + [parts[v] + left])))
            return
        upper = min(parts[v + 1], parts[v] + left)
        for j in range(parts[v], upper + 1):
            extend(v + 1, chosen + [j], left - (j - parts[v]))

    extend(0, [], nboxes)
    return PieriExpansion(tuple(sorted(terms, key=lambda p: p.parts)), r)

def _complete_homogeneous(values: Sequence[Fraction], top: int) -> list[Fraction]:
    """h_0 .. h_top evaluated at values."""
    h = [Fraction(1)] + [Fraction(0)] * top
    for x in values:
        for k in range(1, top + 1):
            h[k] += x * h[k - 1]
    return h

def schur_eval(P: Partition, values: Sequence[int|Fraction]) -> Fraction:
    """Evaluate the Schur polynomial s_P at values through the
        Jacobi-Trudi determinant det(h_{lambda_u - u + v}).
    """
    rows = _as_partition(P).decreasing()
    tert(isinstance(values, (list, tuple)), 'values must be a sequence')
    values = [Fraction(x) for x in values]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    h = _complete_homogeneous(values, rows[0] + n)

    def entry(k: int) -> Fraction:
        return h[k] if 0 <= k < len(h) else Fraction(0)

    return determinant([
        [entry(rows[u] - u + v) for v in range(n)]
        for u in range(n)
    ])

def semistandard_tableaux(P: Partition, rank: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every semistandard tableau of shape P (rows in decreasing
        order, entries 1..rank, rows weakly and columns strictly
        increasing) by backtracking over the cells in reading order.
    """
    rows = _as_partition(P).decreasing()
    vert(type(rank) is int and rank >= 0, 'rank must be a nonnegative int')
    if len(rows) > rank:
        return
    cells = [(u, v) for u, length in enumerate(rows) for v in range(length)]
    tableau = [[0] * length for length in rows]

    def backtrack(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(cells):
            yield tuple(tuple(row) for row in tableau)
            return
        u, v = cells[pos]
        low = 1
        if v > 0:
            low = tableau[u][v - 1]
        if u > 0:
            low = max(low, tableau[u - 1][v] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for w in range(u + 1, len(rows)) if rows[w] > v)
        for val in range(low, rank - below + 1):
            tableau[u][v] = val
            yield from backtrack(pos + 1)
        tableau[u][v] = 0

    yield from backtrack(0)

def schur_eval_ssyt(P: Partition, values: Sequence[int|Fraction]) -> Fraction:
    """Evaluate s_P at values by summing the monomials of all
        semistandard tableaux.
    """
    values = [Fraction(x) for x in values]
    total = Fraction(0)
    for tableau in semistandard_tableaux(P, len(values)):
        term = Fraction(1)
        for row in tableau:
            for entry in row:
                term *= values[entry - 1]
        total += term
    return total

@lru_cache(maxsize=4096)
def _graded_counts(rows: tuple[int, ...], twists: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Twist distribution over the semistandard tableaux of shape rows,
        aggregated through the chain of shapes filled by entries
        1..k (each step adds a horizontal strip).
    """
    n = len(twists)
    depth = len(rows)
    layer: dict[tuple[int, ...], dict[int, int]] = {(0,) * depth: {0: 1}}
    for k in range(1, n + 1):
        d = twists[k - 1]
        nxt: dict[tuple[int, ...], dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for mu, dist in layer.items():
            for nu in _horizontal_strips(mu, rows, k):
                added = sum(nu) - sum(mu)
                target = nxt[nu]
                for twist, count in dist.items():
                    target[twist + added * d] += count
        layer = nxt
    final = layer.get(rows, {})
    return tuple(sorted(final.items(), reverse=True))

def _horizontal_strips(mu: tuple[int, ...], shape: tuple[int, ...],
                       k: int) -> Iterator[tuple[int, ...]]:
    """Shapes nu inside shape with at most k rows such that nu/mu is a
        horizontal strip: mu_u <= nu_u <= mu_{u-1}.
    """
    depth = len(shape)

    def build(u: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if u == depth:
            yield tuple(prefix)
            return
        if u >= k:
            if mu[u] == 0:
                yield tuple(prefix + [0] * (depth - u))
            return
        upper = shape[u] if u == 0 else min(shape[u], mu[u - 1])
        for value in range(mu[u], upper + 1):
            yield from build(u + 1, prefix + [value])

    yield from build(0, [])

def schur_generator_degrees(P: Partition, twists: Sequence[int],
                            source: str = '') -> GradedFreeModule:
    """Graded generators of Sigma^P E for E = sum R(d_k): one summand
        R(sum of d over the cells) per semistandard tableau of shape P.
        Empty when P has more nonzero parts than E has summands.
    """
    P = _as_partition(P)
    tert(isinstance(twists, (list, tuple)), 'twists must be a sequence of int')
    twists = tuple(twists)
    tert(all(type(d) is int for d in twists), 'twists must be int')
    if P.length > len(twists):
        return GradedFreeModule()
    counts = dict(_graded_counts(P.decreasing(), twists))
    result = GradedFreeModule.from_twists(counts, source)
    tressa(result.rank == schur_rank(P, len(twists)),
        f'graded degrees of {P} do not match its rank')
    return result

def _module_twists(module: GradedFreeModule) -> tuple[int, ...]:
    tert(isinstance(module, GradedFreeModule), 'module must be GradedFreeModule')
    return tuple(d for d, _, m in module.summands for _ in range(m))

def schur_functor(P: Partition, module: GradedFreeModule,
                  source: str = '') -> GradedFreeModule:
    """Sigma^P of a graded free module."""
    return schur_generator_degrees(P, _module_twists(module), source)

def exterior_power(k: int, module: GradedFreeModule, source: str = '') -> GradedFreeModule:
    vert(type(k) is int and k >= 0, 'k must be a nonnegative int')
    if k > module.rank:
        return GradedFreeModule()
    return schur_functor(Partition((1,) * k), module, source)

def symmetric_power(k: int, module: GradedFreeModule, source: str = '') -> GradedFreeModule:
    vert(type(k) is int and k >= 0, 'k must be a nonnegative int')
    return schur_functor(Partition((k,)), module, source)

def _partitions_of(n: int, max_parts: int, largest: int|None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into at most max_parts parts, decreasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, max_parts - 1, first):
            yield (first,) + rest

def _plethysm_candidates(m: int, r: int, reading: str) -> list[Partition]:
    found = []
    for rows in _partitions_of(2 * m, r):
        P = Partition(tuple(reversed(rows)))
        if reading == 'literal':
            ok = all(p % 2 == 0 for p in P.parts)
        else:
            ok = all(p % 2 == 0 for p in conjugate(P).parts)
        if ok:
            found.append(P)
    return sorted(found, key=lambda p: p.parts)

def plethysm_reading(m: int, r: int) -> tuple[str, list[Partition]]:
    """Decide which reading of the even-part condition describes
        S_m(wedge^2 E) for E of rank r: 'literal' (parts even) or
        'conjugate' (columns even). The reading is accepted only when
        the ranks add up to the rank of S_m(wedge^2 E).
    """
    vert(type(m) is int and m >= 0, 'm must be a nonnegative int')
    vert(type(r) is int and r >= 2, 'r must be an int >= 2')
    target = comb(comb(r, 2) + m - 1, m)
    for reading in ('literal', 'conjugate'):
        candidates = _plethysm_candidates(m, r, reading)
        if sum(schur_rank(P, r) for P in candidates) == target:
            logger.debug('plethysm S_%d(wedge^2) in rank %d: %s reading validated', m, r, reading)
            return reading, candidates
    tressa(False, f'no reading of the plethysm index set validates for m={m}, r={r}')

def sym_wedge2_plethysm(m: int, r: int) -> list[Partition]:
    """Index set of the decomposition S_m(wedge^2 E) = sum Sigma^I E."""
    return plethysm_reading(m, r)[1]
