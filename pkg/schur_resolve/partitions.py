"""Partitions in the weakly increasing convention `0 <= i_1 <= ... <= i_r`,
    with the surgery `I -> I'` that indexes the terms of the Lascoux
    complex and the rank formulas for Schur modules and `L_p^q`.
"""
from __future__ import annotations
from .errors import tert, tressa, vert
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from packify import pack, unpack
from typing import Iterator
import logging


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Partition:
    """A weakly increasing tuple of nonnegative integers. Leading zeros
        are padding: they count as slots but are ignored by equality and
        hashing.
    """
    parts: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        tert(isinstance(self.parts, (tuple, list)),
            'parts must be a tuple or list of int')
        parts = tuple(self.parts)
        tert(all(type(p) is int for p in parts), 'parts must be int')
        vert(all(p >= 0 for p in parts), 'parts must be nonnegative')
        vert(all(parts[k] <= parts[k+1] for k in range(len(parts) - 1)),
            f'parts must be weakly increasing, got {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse a comma-separated increasing list like '2,2,3,5,8'.
            The empty string is the empty partition.
        """
        tert(type(text) is str, 'text must be str')
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(','))
        except ValueError:
            raise ValueError(f'cannot parse partition from {text!r}')
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)

    @property
    def slots(self) -> int:
        """Number of parts including padding zeros."""
        return len(self.parts)

    def stripped(self) -> Partition:
        return Partition(tuple(p for p in self.parts if p))

    def padded(self, slots: int) -> Partition:
        """Return the same partition written with exactly `slots` parts.
            Raises ValueError if it has more nonzero parts than slots.
        """
        vert(slots >= self.length,
            f'{self} has {self.length} nonzero parts, cannot fit {slots} slots')
        nonzero = self.stripped().parts
        return Partition((0,) * (slots - len(nonzero)) + nonzero)

    def decreasing(self) -> tuple[int, ...]:
        """Nonzero parts, largest first (the usual row lengths)."""
        return tuple(reversed(self.stripped().parts))

    def is_rectangle(self) -> bool:
        return len(set(self.stripped().parts)) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.stripped().parts == other.stripped().parts

    def __hash__(self) -> int:
        return hash(tuple(p for p in self.parts if p))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return ','.join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f'Partition({self.parts})'

    def pack(self) -> bytes:
        """Pack the parts (padding included) into bytes. Raises
            packify.UsageError on failure.
        """
        return pack(list(self.parts))

    @classmethod
    def unpack(cls, data: bytes, /, *, inject: dict = {}) -> Partition:
        """Unpack a Partition from bytes. Raises packify.UsageError or
            ValueError on failure.
        """
        return cls(tuple(unpack(data, inject={**globals(), **inject})))


@dataclass(frozen=True)
class SurgeryResult:
    """Outcome of the Lascoux surgery on a partition I: the derived
        partition I' (None when absent), the Durfee square p_I, the
        shift n(I) = (i-1)p_I and the homological degree -|I| + n(I).
    """
    derived: Partition | None
    durfee: int
    shift: int
    homdeg: int

    @property
    def present(self) -> bool:
        return self.derived is not None


def _as_partition(value: Partition | tuple | list) -> Partition:
    if isinstance(value, Partition):
        return value
    tert(isinstance(value, (tuple, list)), 'partition must be Partition, tuple or list')
    return Partition(tuple(value))

def conjugate(P: Partition) -> Partition:
    """Column lengths of the Young diagram of P, weakly increasing."""
    P = _as_partition(P)
    top = max(P.parts, default=0)
    columns = [sum(1 for p in P.parts if p >= k) for k in range(1, top + 1)]
    return Partition(tuple(reversed(columns)))

def durfee(P: Partition) -> int:
    """Side of the largest square fitting in the Young diagram of P."""
    rows = _as_partition(P).decreasing()
    size = 0
    for s, row in enumerate(rows, start=1):
        if row >= s:
            size = s
        else:
            break
    return size

def contains(inner: Partition, outer: Partition) -> bool:
    """True iff every part of inner is at most the corresponding part
        of outer, the shorter one right-aligned against the longer.
    """
    inner, outer = _as_partition(inner), _as_partition(outer)
    slots = max(inner.slots, outer.slots, inner.length, outer.length)
    a = inner.padded(slots).parts
    b = outer.padded(slots).parts
    return all(x <= y for x, y in zip(a, b))

def lascoux_surgery(I: Partition, i: int, t: int, c: int) -> SurgeryResult:
    """Compute p_I, n(I), the homological degree and the derived
        partition I' of length t (None when the guard
        i_{q-p+1} >= p + i - 1 fails or I is empty). I must be written
        with exactly q = t - i + 1 slots and parts at most t + c - 1.
    """
    I = _as_partition(I)
    vert(type(i) is int and type(t) is int and type(c) is int,
        'i, t, c must be int')
    vert(t >= 1 and c >= 1, 't and c must be positive')
    vert(1 <= i <= t, f'i must be in [1, {t}], got {i}')
    q = t - i + 1
    vert(I.slots == q, f'I must have exactly {q} slots, got {I.slots}')
    vert(all(p <= t + c - 1 for p in I.parts),
        f'parts of I must be at most {t + c - 1}, got {I}')

    p = durfee(I)
    shift = (i - 1) * p
    homdeg = -I.weight + shift

    if I.weight == 0:
        return SurgeryResult(None, p, shift, homdeg)

    parts = I.parts
    if parts[q - p] < p + i - 1:
        return SurgeryResult(None, p, shift, homdeg)

    tressa(q == p or parts[q - p - 1] <= p,
        f'Durfee bound violated for {I}: i_(q-p) > p')
    derived = parts[:q - p] + (p,) * (i - 1) + tuple(x - i + 1 for x in parts[q - p:])
    tressa(len(derived) == t, f'derived partition of {I} has length {len(derived)} != {t}')
    tressa(all(derived[k] <= derived[k+1] for k in range(t - 1)),
        f'derived partition {derived} of {I} is not weakly increasing')
    tressa(-q * (t + c - i) <= homdeg <= -1,
        f'homological degree {homdeg} of {I} out of range')

    return SurgeryResult(Partition(derived), p, shift, homdeg)

def adjacency(I: Partition, H: Partition, i: int, t: int, c: int) -> int | None:
    """Return rho = a - h > 0 when H is contained in I and they differ in
        exactly one slot (the differential block from the I-term to the
        H-term is then built from the rho-th exterior powers). Returns
        None when H is not contained in I (the block is zero) or when
        they differ in two or more slots (logged for inspection).
    """
    I, H = _as_partition(I), _as_partition(H)
    si = lascoux_surgery(I, i, t, c)
    sh = lascoux_surgery(H, i, t, c)
    vert(si.present and sh.present,
        f'both {I} and {H} must have a derived partition')
    vert(si.homdeg == sh.homdeg - 1,
        f'homdeg({I})={si.homdeg} must equal homdeg({H})-1={sh.homdeg - 1}')

    if not contains(H, I):
        return None

    spots = [k for k in range(I.slots) if I[k] != H[k]]
    if len(spots) != 1:
        logger.warning('adjacent partitions %s and %s differ in %d slots',
            I, H, len(spots))
        return None

    rho = I[spots[0]] - H[spots[0]]

    ci, ch = conjugate(si.derived), conjugate(sh.derived)
    slots = max(ci.slots, ch.slots)
    ci, ch = ci.padded(slots).parts, ch.padded(slots).parts
    derived_spots = [k for k in range(slots) if ci[k] != ch[k]]
    tressa(len(derived_spots) == 1 and ci[derived_spots[0]] - ch[derived_spots[0]] == rho,
        f'derived partitions of {I} and {H} do not differ by {rho} in one spot')

    return rho

def schur_rank(P: Partition, r: int) -> int:
    """Rank of the Schur module of a rank r free module, by the product
        formula over pairs u < v of (i_v - i_u + v - u) / (v - u). Zero
        when P has more than r nonzero parts.
    """
    P = _as_partition(P)
    vert(type(r) is int and r >= 0, 'r must be a nonnegative int')
    if P.length > r:
        return 0
    parts = P.padded(r).parts
    numerator, denominator = 1, 1
    for u in range(r):
        for v in range(u + 1, r):
            numerator *= parts[v] - parts[u] + v - u
            denominator *= v - u
    tressa(numerator % denominator == 0, f'non-integral rank for {P}')
    return numerator // denominator

def lpq_rank(p: int, q: int, n: int) -> int:
    """Rank of L_p^q F for F free of rank n: binomial(n+p-1, q+p-1) times
        binomial(q+p-2, p-1), zero when q = 0, when q > n and when p = 0
        with q != 1.
    """
    vert(all(type(x) is int and x >= 0 for x in (p, q, n)),
        'p, q, n must be nonnegative int')
    if q == 0 or q > n:
        return 0
    if p == 0:
        return 1 if q == 1 else 0
    return comb(n + p - 1, q + p - 1) * comb(q + p - 2, p - 1)

def partitions_in_box(slots: int, max_part: int) -> list[Partition]:
    """All weakly increasing tuples with the given number of slots and
        parts at most max_part, in lexicographic order.
    """
    vert(slots >= 0 and max_part >= 0, 'slots and max_part must be nonnegative')
    return [
        Partition(parts)
        for parts in combinations_with_replacement(range(max_part + 1), slots)
    ]

def hook_partition(p: int, q: int) -> Partition:
    """The hook (1^(q-1), p) whose Schur module is L_p^q."""
    vert(p >= 1 and q >= 1, 'p and q must be positive')
    return Partition((1,) * (q - 1) + (p,))

def lascoux_extremes(t: int, c: int, i: int) -> tuple[Partition, Partition]:
    """The unique partitions sitting at the last and the next to last
        positions of the Lascoux complex for I_i: ((t+c-1)^p) and
        (t+c-2, (t+c-1)^(p-1)) with p = t + 1 - i.
    """
    vert(1 <= i <= t, f'i must be in [1, {t}]')
    p = t + 1 - i
    top = t + c - 1
    return (
        Partition((top,) * p),
        Partition((top - 1,) + (top,) * (p - 1)),
    )
