"""Betti-level Lascoux resolutions of R/I_i(phi), their duals (Schur
    powers of the cokernel M and canonical modules), and the
    Eagon-Northcott / Buchsbaum-Rim family D_i(phi*).
"""
from __future__ import annotations
from .errors import tert, tressa, vert
from .graded import (
    CLAIMED_MINIMAL,
    ComplexSpec,
    GradedFreeModule,
    MorphismSpec,
    complex_dual_twist,
    gfm_tensor,
)
from .partitions import (
    Partition,
    adjacency,
    conjugate,
    lascoux_surgery,
    partitions_in_box,
)
from .schur import (
    exterior_power,
    schur_generator_degrees,
    sym_wedge2_plethysm,
    symmetric_power,
)
from dataclasses import dataclass
import logging


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LascouxTerm:
    """One partition's contribution Sigma^(I*) G* (x) Sigma^(I') F to
        the Lascoux complex, sitting at homological position -homdeg.
    """
    partition: Partition
    derived: Partition
    homdeg: int
    module: GradedFreeModule

    @property
    def position(self) -> int:
        return -self.homdeg


def _check_spec(spec: MorphismSpec) -> None:
    tert(isinstance(spec, MorphismSpec), 'spec must be MorphismSpec')
    spec.require_minimal()

def lascoux_codim(t: int, c: int, i: int) -> int:
    return (t - i + 1) * (t + c - i)

def partition_label(I: Partition) -> str:
    return f'I=({I})'

def lascoux_terms(spec: MorphismSpec, i: int) -> list[LascouxTerm]:
    """Every nonempty partition I in the (t-i+1) x (t+c-1) box with a
        derived partition, with its graded term. Ordered by position,
        then by partition.
    """
    _check_spec(spec)
    t, c = spec.t, spec.c
    tert(type(i) is int, 'i must be int')
    vert(1 <= i <= t, f'i must be in [1, {t}], got {i}')
    q = t - i + 1
    dual_twists = tuple(-a for a in spec.a)
    terms = []
    for I in partitions_in_box(q, t + c - 1):
        if I.weight == 0:
            continue
        surgery = lascoux_surgery(I, i, t, c)
        if not surgery.present:
            continue
        label = partition_label(I)
        module = gfm_tensor(
            schur_generator_degrees(conjugate(I), dual_twists),
            schur_generator_degrees(surgery.derived, spec.b),
        ).relabel(label)
        logger.debug('partition %s -> %s at position %d: %s',
            I, surgery.derived, -surgery.homdeg, module)
        terms.append(LascouxTerm(I, surgery.derived, surgery.homdeg, module))
    terms.sort(key=lambda term: (term.position, term.partition.parts))
    return terms

def lascoux_resolution(spec: MorphismSpec, i: int) -> ComplexSpec:
    """The minimal free resolution of R/I_i(phi), assuming the ideal of
        i x i minors has the generic depth (t-i+1)(t+c-i).
    """
    terms = lascoux_terms(spec, i)
    codim = lascoux_codim(spec.t, spec.c, i)
    positions = [GradedFreeModule.free(1, 0, 'R')] + [GradedFreeModule()] * codim
    for term in terms:
        tressa(1 <= term.position <= codim,
            f'{term.partition} lands outside positions 1..{codim}')
        positions[term.position] = positions[term.position] + term.module
    cx = ComplexSpec(
        tuple(positions),
        resolved_name=f'R/I_{i}',
        minimality=CLAIMED_MINIMAL,
        codim=codim,
        assumptions=(f'depth of I_{i}(phi) is {codim}',),
    )
    tressa(cx.length == codim, f'Lascoux complex has length {cx.length}, expected {codim}')
    logger.info('Lascoux resolution t=%d c=%d i=%d: ranks %s',
        spec.t, spec.c, i, cx.ranks())
    return cx

def lascoux_adjacency(spec: MorphismSpec, i: int) -> list[tuple[int, Partition, Partition, int]]:
    """Nonzero differential blocks of the Lascoux complex between
        positions k and k-1 (k >= 2) as (k, I, H, rho).
    """
    terms = lascoux_terms(spec, i)
    by_position: dict[int, list[LascouxTerm]] = {}
    for term in terms:
        by_position.setdefault(term.position, []).append(term)
    blocks = []
    for k in sorted(by_position):
        for upper in by_position[k]:
            for lower in by_position.get(k - 1, []):
                rho = adjacency(upper.partition, lower.partition, i, spec.t, spec.c)
                if rho is not None:
                    blocks.append((k, upper.partition, lower.partition, rho))
    return blocks

def schur_power_name(spec: MorphismSpec, p: int) -> str:
    c, t = spec.c, spec.t
    names = [f'Σ^(({c - 1})^{p}) M']
    if c == 2:
        names.append(f'∧^{p} M')
    if p == 2 and c >= 2 and t >= 2:
        J = Partition((c - 1,) * p)
        if sym_wedge2_plethysm(c - 1, t) == [J]:
            names.append(f'S_{c - 1}(∧^2 M)')
    return ' = '.join(names)

def schur_power_resolution(spec: MorphismSpec, p: int) -> ComplexSpec:
    """Resolution of the Schur power Sigma^J M, J = ((c-1)^p), as the
        dual of the Lascoux resolution for i = t+1-p twisted by -p*ell.
    """
    _check_spec(spec)
    tert(type(p) is int, 'p must be int')
    vert(1 <= p <= spec.t, f'p must be in [1, {spec.t}], got {p}')
    lascoux = lascoux_resolution(spec, spec.t + 1 - p)
    return complex_dual_twist(lascoux, -p * spec.ell, schur_power_name(spec, p))

def canonical_module_resolution(spec: MorphismSpec, i: int) -> ComplexSpec:
    """Resolution of the canonical module K of R/I_i: the dual of the
        Lascoux resolution twisted by -nvars.
    """
    lascoux = lascoux_resolution(spec, i)
    return complex_dual_twist(lascoux, -spec.nvars, f'K_(R/I_{i})')

def d_complex_label(spec: MorphismSpec, i: int, k: int) -> str:
    """Label of position k of D_i(phi*)."""
    if k <= i:
        return f'∧^{k}G*⊗S_{i - k}F*'
    m = k - i - 1
    return f'∧^{spec.t + i + m}G*⊗S_{m}F⊗∧^{spec.t}F'

def d_complex_name(i: int) -> str:
    return {0: 'R/I_t', 1: 'M'}.get(i, f'S_{i}M')

def eagon_northcott_family(spec: MorphismSpec, i: int) -> ComplexSpec:
    """The spliced complex D_i(phi*) of length c resolving S_iM (R/I_t
        for i = 0, M for i = 1). Position k is wedge^k G* (x) S_(i-k) F*
        for k <= i and wedge^(t+k-1) G* (x) S_(k-i-1) F (x) wedge^t F
        beyond. i = -1 gives the pure dual strand.
    """
    _check_spec(spec)
    tert(type(i) is int, 'i must be int')
    vert(-1 <= i <= spec.c, f'i must be in [-1, {spec.c}], got {i}')
    t, c = spec.t, spec.c
    G_dual, F, F_dual = spec.G_dual(), spec.F(), spec.F_dual()
    top_F = exterior_power(t, F)
    positions = []
    for k in range(c + 1):
        if k <= i:
            module = gfm_tensor(exterior_power(k, G_dual), symmetric_power(i - k, F_dual))
        else:
            m = k - i - 1
            module = gfm_tensor(
                gfm_tensor(exterior_power(t + i + m, G_dual), symmetric_power(m, F)),
                top_F,
            )
        positions.append(module.relabel(d_complex_label(spec, i, k)))
    assumptions = ('convention-extended: i = -1 dual strand',) if i == -1 else ()
    cx = ComplexSpec(
        tuple(positions),
        resolved_name=d_complex_name(i),
        minimality=CLAIMED_MINIMAL,
        codim=c,
        assumptions=assumptions,
    )
    logger.info('D_%d t=%d c=%d: ranks %s', i, t, c, cx.ranks())
    return cx
