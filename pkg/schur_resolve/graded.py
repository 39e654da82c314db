"""Graded free modules and complexes kept as twist multisets. A stored
    twist d stands for a copy of R(d), whose generator sits in degree -d.
"""
from __future__ import annotations
from .errors import tert, tressa, vert
from binascii import crc32
from collections import defaultdict
from dataclasses import dataclass, field, replace
from packify import pack, unpack
from typing import Iterable
import csv
import io
import json
import logging


logger = logging.getLogger(__name__)

CLAIMED_MINIMAL = 'claimed-minimal'
POSSIBLY_NON_MINIMAL = 'possibly-non-minimal'
FORMATS = ('text', 'json', 'csv')


def _canonical(triples: Iterable[tuple[int, str, int]]) -> tuple[tuple[int, str, int], ...]:
    merged: dict[tuple[int, str], int] = defaultdict(int)
    for twist, source, mult in triples:
        tert(type(twist) is int and type(mult) is int and type(source) is str,
            'summands must be (int twist, str source, int multiplicity)')
        vert(mult >= 0, f'multiplicity must be nonnegative, got {mult}')
        merged[(twist, source)] += mult
    return tuple(
        (twist, source, mult)
        for (twist, source), mult in sorted(merged.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
        if mult
    )


@dataclass(frozen=True)
class GradedFreeModule:
    """A finite direct sum of twisted copies of R. Each summand carries
        a provenance label so that pieces such as H can be traced
        through an assembly.
    """
    summands: tuple[tuple[int, str, int], ...] = field(default=())

    def __post_init__(self) -> None:
        tert(isinstance(self.summands, (tuple, list)),
            'summands must be a tuple of (twist, source, multiplicity)')
        object.__setattr__(self, 'summands', _canonical(self.summands))

    @classmethod
    def from_twists(cls, twists: dict[int, int], source: str = '') -> GradedFreeModule:
        """Build a module from a {twist: multiplicity} map, labelling
            every summand with source.
        """
        tert(isinstance(twists, dict), 'twists must be dict[int, int]')
        return cls(tuple((d, source, m) for d, m in twists.items()))

    @classmethod
    def free(cls, rank: int, twist: int = 0, source: str = '') -> GradedFreeModule:
        """R(twist)^rank."""
        return cls(((twist, source, rank),))

    @property
    def rank(self) -> int:
        return sum(m for _, _, m in self.summands)

    def twists(self) -> dict[int, int]:
        """Aggregated {twist: multiplicity}, twists descending."""
        out: dict[int, int] = {}
        for d, _, m in self.summands:
            out[d] = out.get(d, 0) + m
        return out

    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({s for _, s, _ in self.summands}))

    def relabel(self, source: str) -> GradedFreeModule:
        return GradedFreeModule(tuple((d, source, m) for d, _, m in self.summands))

    def only(self, source: str) -> GradedFreeModule:
        return GradedFreeModule(tuple(x for x in self.summands if x[1] == source))

    def without(self, source: str) -> GradedFreeModule:
        return GradedFreeModule(tuple(x for x in self.summands if x[1] != source))

    def twist(self, s: int) -> GradedFreeModule:
        """M(s): every R(d) becomes R(d+s)."""
        return GradedFreeModule(tuple((d + s, src, m) for d, src, m in self.summands))

    def contains_summands(self, other: GradedFreeModule) -> bool:
        mine = {(d, s): m for d, s, m in self.summands}
        return all(mine.get((d, s), 0) >= m for d, s, m in other.summands)

    def remove(self, other: GradedFreeModule) -> GradedFreeModule:
        """Remove the labelled summands of other. Removing anything not
            present is a convention breach.
        """
        tressa(self.contains_summands(other),
            f'cannot remove {other.summands} from {self.summands}')
        mine = {(d, s): m for d, s, m in self.summands}
        for d, s, m in other.summands:
            mine[(d, s)] -= m
        return GradedFreeModule(tuple((d, s, m) for (d, s), m in mine.items()))

    def is_empty(self) -> bool:
        return not self.summands

    def __add__(self, other: GradedFreeModule) -> GradedFreeModule:
        tert(isinstance(other, GradedFreeModule), 'can only add GradedFreeModule')
        return GradedFreeModule(self.summands + other.summands)

    def __str__(self) -> str:
        if not self.summands:
            return '0'
        return ' + '.join(
            f'R({d})^{m}' + (f'[{s}]' if s else '')
            for d, s, m in self.summands
        )

    def pack(self) -> bytes:
        """Pack the summands into bytes. Raises packify.UsageError on
            failure.
        """
        return pack([list(x) for x in self.summands])

    @classmethod
    def unpack(cls, data: bytes, /, *, inject: dict = {}) -> GradedFreeModule:
        """Unpack a module from bytes. Raises packify.UsageError or
            ValueError on failure.
        """
        triples = unpack(data, inject={**globals(), **inject})
        return cls(tuple(tuple(x) for x in triples))


def gfm_dual_twist(m: GradedFreeModule, s: int = 0) -> GradedFreeModule:
    """Hom(m, R)(s): each R(d) becomes R(-d+s). Labels gain a '*'."""
    tert(isinstance(m, GradedFreeModule), 'm must be GradedFreeModule')
    return GradedFreeModule(tuple(
        (-d + s, _dual_label(src), mult) for d, src, mult in m.summands
    ))

def _dual_label(source: str) -> str:
    if not source:
        return ''
    if source.endswith('*') and '⊗' not in source:
        return source[:-1]
    return f'({source})*' if '⊗' in source else f'{source}*'

def _tensor_label(x: str, y: str) -> str:
    if not x:
        return y
    if not y:
        return x
    return f'{x}⊗{y}'

def gfm_tensor(x: GradedFreeModule, y: GradedFreeModule) -> GradedFreeModule:
    """Tensor product: twists add, multiplicities multiply."""
    tert(isinstance(x, GradedFreeModule) and isinstance(y, GradedFreeModule),
        'x and y must be GradedFreeModule')
    return GradedFreeModule(tuple(
        (d1 + d2, _tensor_label(s1, s2), m1 * m2)
        for d1, s1, m1 in x.summands
        for d2, s2, m2 in y.summands
    ))

def gfm_difference(x: GradedFreeModule, y: GradedFreeModule,
                   source: str|None = None) -> GradedFreeModule:
    """Graded multiset difference x - y on aggregated twists. Raises
        ValueError if some twist would get a negative multiplicity.
    """
    tert(isinstance(x, GradedFreeModule) and isinstance(y, GradedFreeModule),
        'x and y must be GradedFreeModule')
    counts = x.twists()
    for d, m in y.twists().items():
        counts[d] = counts.get(d, 0) - m
        vert(counts[d] >= 0, f'graded difference has negative multiplicity at twist {d}')
    if source is None:
        labels = x.labels()
        source = labels[0] if len(labels) == 1 else ''
    return GradedFreeModule.from_twists({d: m for d, m in counts.items() if m}, source)

def direct_sum(modules: Iterable[GradedFreeModule]) -> GradedFreeModule:
    result = GradedFreeModule()
    for m in modules:
        result = result + m
    return result


@dataclass(frozen=True)
class ComplexSpec:
    """Betti-level description of a free resolution: the free module at
        each homological position, the name of what it resolves, the
        minimality claim, the codimension of the resolved module (0 when
        not known) and any hypotheses the shape depends on.
    """
    positions: tuple[GradedFreeModule, ...] = field(default=())
    resolved_name: str = ''
    minimality: str = CLAIMED_MINIMAL
    codim: int = 0
    assumptions: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        tert(isinstance(self.positions, (tuple, list)), 'positions must be a tuple')
        tert(all(isinstance(p, GradedFreeModule) for p in self.positions),
            'positions must contain GradedFreeModule')
        vert(self.minimality in (CLAIMED_MINIMAL, POSSIBLY_NON_MINIMAL),
            f'unknown minimality flag {self.minimality!r}')
        positions = list(self.positions)
        while positions and positions[-1].is_empty():
            positions.pop()
        object.__setattr__(self, 'positions', tuple(positions))
        object.__setattr__(self, 'assumptions', tuple(self.assumptions))

    @property
    def length(self) -> int:
        """Index of the last nonzero position."""
        return len(self.positions) - 1

    def __len__(self) -> int:
        return len(self.positions)

    def __getitem__(self, k: int) -> GradedFreeModule:
        if 0 <= k < len(self.positions):
            return self.positions[k]
        return GradedFreeModule()

    def table(self) -> list[dict[int, int]]:
        """Aggregated {twist: multiplicity} per position."""
        return [p.twists() for p in self.positions]

    def ranks(self) -> list[int]:
        return [p.rank for p in self.positions]

    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({s for p in self.positions for s in p.labels()}))

    def with_positions(self, positions: Iterable[GradedFreeModule], **changes) -> ComplexSpec:
        return replace(self, positions=tuple(positions), **changes)

    def shift(self, k: int) -> ComplexSpec:
        """Homological shift: position j moves to j + k. Dropping
            nonzero leading positions is rejected.
        """
        if k >= 0:
            return self.with_positions((GradedFreeModule(),) * k + self.positions)
        vert(all(p.is_empty() for p in self.positions[:-k]),
            'cannot shift away nonzero positions')
        return self.with_positions(self.positions[-k:])

    def twist(self, s: int) -> ComplexSpec:
        return self.with_positions(p.twist(s) for p in self.positions)

    def without(self, source: str) -> ComplexSpec:
        return self.with_positions(p.without(source) for p in self.positions)

    def only(self, source: str) -> ComplexSpec:
        return self.with_positions(p.only(source) for p in self.positions)

    def direct_sum(self, other: ComplexSpec) -> ComplexSpec:
        """Positionwise direct sum, keeping this complex's metadata."""
        tert(isinstance(other, ComplexSpec), 'other must be ComplexSpec')
        size = max(len(self), len(other))
        return self.with_positions(self[k] + other[k] for k in range(size))

    def split(self, position: int, source: str,
              parts: Iterable[GradedFreeModule]) -> ComplexSpec:
        """Replace the summands labelled source at position by parts,
            which must carry exactly the same graded content.
        """
        parts = direct_sum(parts)
        old = self[position].only(source)
        tressa(not old.is_empty(), f'no summand labelled {source!r} at position {position}')
        tressa(old.twists() == parts.twists(),
            f'split of {source!r} at position {position} does not conserve twists')
        positions = list(self.positions)
        positions[position] = positions[position].without(source) + parts
        return self.with_positions(positions)

    def cancel(self, position: int, lower: GradedFreeModule,
               upper: GradedFreeModule) -> ComplexSpec:
        """Cancel an isomorphism block: remove lower from position and
            upper from position + 1. Both must be present and carry the
            same twists.
        """
        tressa(lower.twists() == upper.twists(),
            f'cannot cancel {lower} against {upper}: twists differ')
        positions = list(self.positions) + [GradedFreeModule()]
        positions[position] = positions[position].remove(lower)
        positions[position + 1] = positions[position + 1].remove(upper)
        logger.debug('cancelled %s at positions %d/%d', lower, position, position + 1)
        return self.with_positions(positions)

    def checksum(self) -> int:
        return crc32(self.pack())

    def pack(self) -> bytes:
        """Pack the complex into bytes. Raises packify.UsageError on
            failure.
        """
        return pack([
            self.resolved_name,
            self.minimality,
            self.codim,
            list(self.assumptions),
            [p.pack() for p in self.positions],
        ])

    @classmethod
    def unpack(cls, data: bytes, /, *, inject: dict = {}) -> ComplexSpec:
        """Unpack a complex from bytes. Raises packify.UsageError or
            ValueError on failure.
        """
        name, minimality, codim, assumptions, positions = unpack(
            data,
            inject={**globals(), **inject}
        )
        return cls(
            tuple(GradedFreeModule.unpack(p, inject=inject) for p in positions),
            name, minimality, codim, tuple(assumptions),
        )


@dataclass(frozen=True)
class MorphismSpec:
    """Degree data of a homogeneous map phi: F = sum R(b_i) -> G =
        sum R(a_j) with t = rank F and t + c - 1 = rank G, over a
        polynomial ring in nvars variables.
    """
    t: int
    c: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    nvars: int = 0

    def __post_init__(self) -> None:
        tert(type(self.t) is int and type(self.c) is int, 't and c must be int')
        vert(self.t >= 1 and self.c >= 1, 't and c must be positive')
        tert(isinstance(self.a, (tuple, list)) and isinstance(self.b, (tuple, list)),
            'a and b must be sequences of int')
        a, b = tuple(self.a), tuple(self.b)
        tert(all(type(x) is int for x in a + b), 'a and b must contain int')
        vert(len(a) == self.t + self.c - 1,
            f'a must have {self.t + self.c - 1} entries, got {len(a)}')
        vert(len(b) == self.t, f'b must have {self.t} entries, got {len(b)}')
        nvars = self.nvars or self.t * (self.t + self.c - 1)
        tert(type(nvars) is int, 'nvars must be int')
        vert(nvars >= 1, 'nvars must be positive')
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'nvars', nvars)

    @classmethod
    def linear(cls, t: int, c: int, nvars: int = 0) -> MorphismSpec:
        """A matrix of linear forms: a = (1, ..., 1), b = (0, ..., 0)."""
        return cls(t, c, (1,) * (t + c - 1), (0,) * t, nvars)

    @classmethod
    def mixed(cls, t: int, c: int, nvars: int = 0) -> MorphismSpec:
        """Alternating degrees a_j = 1 + (j mod 2), b_i = -(i mod 2)."""
        return cls(
            t, c,
            tuple(1 + (j % 2) for j in range(t + c - 1)),
            tuple(-(i % 2) for i in range(t)),
            nvars,
        )

    @property
    def ell(self) -> int:
        return sum(self.a) - sum(self.b)

    @property
    def rank_G(self) -> int:
        return self.t + self.c - 1

    def is_minimal(self) -> bool:
        """Every entry of phi has positive degree."""
        return all(aj - bi >= 1 for aj in self.a for bi in self.b)

    def require_minimal(self) -> None:
        vert(self.is_minimal(),
            f'spec is not minimal: need a_j - b_i >= 1 for a={self.a}, b={self.b}')

    def F(self) -> GradedFreeModule:
        return GradedFreeModule(tuple((d, 'F', 1) for d in self.b))

    def G(self) -> GradedFreeModule:
        return GradedFreeModule(tuple((d, 'G', 1) for d in self.a))

    def F_dual(self) -> GradedFreeModule:
        return gfm_dual_twist(self.F())

    def G_dual(self) -> GradedFreeModule:
        return gfm_dual_twist(self.G())

    def describe(self) -> str:
        return (f't={self.t} c={self.c} a={",".join(map(str, self.a))} '
            f'b={",".join(map(str, self.b))} nvars={self.nvars}')

    def pack(self) -> bytes:
        """Pack the spec into bytes. Raises packify.UsageError on
            failure.
        """
        return pack([self.t, self.c, list(self.a), list(self.b), self.nvars])

    @classmethod
    def unpack(cls, data: bytes, /, *, inject: dict = {}) -> MorphismSpec:
        """Unpack a spec from bytes. Raises packify.UsageError or
            ValueError on failure.
        """
        t, c, a, b, nvars = unpack(data, inject={**globals(), **inject})
        return cls(t, c, tuple(a), tuple(b), nvars)


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in T stored densely from the lowest
        exponent. The zero polynomial has no coefficients.
    """
    low: int = 0
    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        low = self.low
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            low += 1
        if not coeffs:
            low = 0
        object.__setattr__(self, 'low', low)
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> LaurentPolynomial:
        """Build from {exponent: coefficient}."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        low, high = min(terms), max(terms)
        return cls(low, tuple(terms.get(e, 0) for e in range(low, high + 1)))

    def terms(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        terms = self.terms()
        for e, c in other.terms().items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial.from_terms(terms)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial|int) -> LaurentPolynomial:
        if type(other) is int:
            return LaurentPolynomial(self.low, tuple(c * other for c in self.coeffs))
        terms: dict[int, int] = defaultdict(int)
        for e1, c1 in self.terms().items():
            for e2, c2 in other.terms().items():
                terms[e1 + e2] += c1 * c2
        return LaurentPolynomial.from_terms(terms)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by T^k."""
        return LaurentPolynomial(self.low + k, self.coeffs)

    def reflect(self) -> LaurentPolynomial:
        """Substitute T -> 1/T."""
        return LaurentPolynomial(-self.high, tuple(reversed(self.coeffs))) \
            if self.coeffs else LaurentPolynomial()

    def divide_by_one_minus_t(self, k: int = 1) -> LaurentPolynomial|None:
        """Exact quotient by (1-T)^k, or None if it does not divide."""
        vert(k >= 0, 'k must be nonnegative')
        current = self
        for _ in range(k):
            if current.is_zero():
                return current
            quotient = []
            running = 0
            for c in current.coeffs[:-1]:
                running += c
                quotient.append(running)
            if running + current.coeffs[-1] != 0:
                return None
            current = LaurentPolynomial(current.low, tuple(quotient))
        return current

    def order_at_one(self) -> int:
        """Largest k with (1-T)^k dividing this polynomial. Raises
            ValueError for the zero polynomial.
        """
        vert(not self.is_zero(), 'the zero polynomial has infinite order')
        k = 0
        current = self
        while True:
            nxt = current.divide_by_one_minus_t(1)
            if nxt is None:
                return k
            current = nxt
            k += 1

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        pieces = []
        for e, c in sorted(self.terms().items()):
            mono = '' if e == 0 else ('T' if e == 1 else f'T^{e}')
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f'{abs(c)}{mono}'
            sign = '-' if c < 0 else '+'
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text


def complex_dual_twist(cx: ComplexSpec, s: int = 0,
                       resolved_name: str|None = None) -> ComplexSpec:
    """Reverse the positions of cx and replace each by its dual twisted
        by s. Provenance labels are dualized.
    """
    tert(isinstance(cx, ComplexSpec), 'cx must be ComplexSpec')
    vert(len(cx) > 0, 'cannot dualize an empty complex')
    name = resolved_name
    if name is None:
        name = f'Ext({cx.resolved_name}, R)({s})' if cx.resolved_name else ''
    return cx.with_positions(
        (gfm_dual_twist(p, s) for p in reversed(cx.positions)),
        resolved_name=name,
    )

def euler_rank(cx: ComplexSpec) -> int:
    """Alternating sum of the ranks."""
    tert(isinstance(cx, ComplexSpec), 'cx must be ComplexSpec')
    return sum((-1)**k * p.rank for k, p in enumerate(cx.positions))

def hilbert_numerator(cx: ComplexSpec) -> LaurentPolynomial:
    """Sum over positions k and summands R(d)^m of (-1)^k m T^(-d)."""
    tert(isinstance(cx, ComplexSpec), 'cx must be ComplexSpec')
    terms: dict[int, int] = defaultdict(int)
    for k, p in enumerate(cx.positions):
        for d, m in p.twists().items():
            terms[-d] += (-1)**k * m
    return LaurentPolynomial.from_terms(terms)

def cancellation_candidates(cx: ComplexSpec) -> list[tuple[int, int, int]]:
    """(k, twist, count) for consecutive positions k, k+1 sharing a
        twist. Diagnostic only: a shared twist does not license a
        cancellation.
    """
    tert(isinstance(cx, ComplexSpec), 'cx must be ComplexSpec')
    found = []
    for k in range(len(cx) - 1):
        lower, upper = cx[k].twists(), cx[k + 1].twists()
        for d in sorted(set(lower) & set(upper), reverse=True):
            found.append((k, d, min(lower[d], upper[d])))
    if found and cx.minimality == POSSIBLY_NON_MINIMAL:
        logger.warning('%s: %d candidate cancellations', cx.resolved_name, len(found))
    return found


def _render_text(cx: ComplexSpec) -> str:
    # Betti diagram rows are indexed by generator degree minus position.
    cells: dict[tuple[int, int], int] = {}
    for k, p in enumerate(cx.positions):
        for d, m in p.twists().items():
            cells[(-d - k, k)] = cells.get((-d - k, k), 0) + m
    header = [f'resolved: {cx.resolved_name}', f'minimality: {cx.minimality}']
    if not cells:
        return '\n'.join(header + ['0']) + '\n'
    rows = range(min(r for r, _ in cells), max(r for r, _ in cells) + 1)
    cols = range(len(cx))
    entries = [[str(cells.get((r, k), '.')) for k in cols] for r in rows]
    totals = [str(p.rank) for p in cx.positions]
    width = max(len(x) for line in entries + [totals, [str(k) for k in cols]] for x in line)
    labels = [f'{r}:' for r in rows] + ['total:']
    label_width = max(len(x) for x in labels)
    lines = [' ' * label_width + ' ' + ' '.join(str(k).rjust(width) for k in cols)]
    lines.append('total:'.rjust(label_width) + ' ' + ' '.join(x.rjust(width) for x in totals))
    for r, line in zip(rows, entries):
        lines.append(f'{r}:'.rjust(label_width) + ' ' + ' '.join(x.rjust(width) for x in line))
    return '\n'.join(header + lines) + '\n'

def _render_json(cx: ComplexSpec) -> str:
    doc = {
        'resolved_name': cx.resolved_name,
        'minimality': cx.minimality,
        'positions': [
            {
                'index': k,
                'summands': [
                    {'twist': d, 'rank': m, 'source': s}
                    for d, s, m in p.summands
                ],
            }
            for k, p in enumerate(cx.positions)
        ],
    }
    return json.dumps(doc, ensure_ascii=False) + '\n'

def _render_csv(cx: ComplexSpec) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(('position', 'twist', 'multiplicity', 'source'))
    for k, p in enumerate(cx.positions):
        writer.writerows((k, d, m, s) for d, s, m in p.summands)
    return buffer.getvalue()

def render(cx: ComplexSpec, format: str = 'text') -> str:
    """Render cx as a text Betti diagram, as JSON, or as CSV rows of
        position, twist, multiplicity, source. Raises ValueError for an
        unknown format.
    """
    tert(isinstance(cx, ComplexSpec), 'cx must be ComplexSpec')
    vert(format in FORMATS, f'unknown format {format!r}; use one of {FORMATS}')
    return {
        'text': _render_text,
        'json': _render_json,
        'csv': _render_csv,
    }[format](cx)
