"""Mapping-cone assemblies of resolutions built from the D_i family:
    M (x) M, wedge^2 M, the normal module of B_t in codimension 3,
    S_2M (x) I_t, and the predicted first terms of the resolution of
    coker(phi*_(p-1,1)).
"""
from __future__ import annotations
from .errors import tert, tressa, vert
from .interfaces import ComplexProtocol, GradedModuleProtocol
from .graded import (
    CLAIMED_MINIMAL,
    POSSIBLY_NON_MINIMAL,
    ComplexSpec,
    GradedFreeModule,
    MorphismSpec,
    gfm_difference,
    gfm_dual_twist,
    gfm_tensor,
)
from .lascoux import d_complex_label, eagon_northcott_family
from .partitions import Partition, hook_partition
from .schur import exterior_power, pieri_wedge, schur_functor, symmetric_power
import logging


logger = logging.getLogger(__name__)

H_LABEL = 'H'
S2_TOP_LABEL = 'S_2F*⊗∧^tG*⊗∧^tF'
CONE_ASSUMPTION = 'inputs satisfy the hypotheses of the three-complex mapping cone'


def _label_of(x: str, y: str) -> str:
    return f'{x}⊗{y}'

def tensor_complex(module: GradedFreeModule, cx: ComplexSpec) -> ComplexSpec:
    """module (x) cx, position by position."""
    tert(isinstance(module, GradedModuleProtocol), 'module must implement GradedModuleProtocol')
    tert(isinstance(cx, ComplexProtocol), 'cx must implement ComplexProtocol')
    return cx.with_positions(gfm_tensor(module, p) for p in cx.positions)

def mapping_cone3(Q: ComplexSpec, P: ComplexSpec, F: ComplexSpec,
                  resolved_name: str = '') -> ComplexSpec:
    """Betti-level cone of three complexes: position m is
        F_m + P_(m-1) + Q_(m-2). F resolves the target, P is shifted
        once and Q twice. Labels are kept; the result is flagged
        possibly-non-minimal.
    """
    for name, cx in (('Q', Q), ('P', P), ('F', F)):
        tert(isinstance(cx, ComplexProtocol), f'{name} must implement ComplexProtocol')
    size = max(len(F), len(P) + 1, len(Q) + 2)
    positions = [F[m] + P[m - 1] + Q[m - 2] for m in range(size)]
    assumptions = tuple(dict.fromkeys(
        F.assumptions + P.assumptions + Q.assumptions + (CONE_ASSUMPTION,)
    ))
    cx = ComplexSpec(
        tuple(positions),
        resolved_name=resolved_name,
        minimality=POSSIBLY_NON_MINIMAL,
        codim=F.codim,
        assumptions=assumptions,
    )
    logger.debug('cone %s: ranks %s', resolved_name, cx.ranks())
    return cx

def _require_c(spec: MorphismSpec, allowed: tuple[int, ...]) -> None:
    tert(isinstance(spec, MorphismSpec), 'spec must be MorphismSpec')
    spec.require_minimal()
    vert(spec.c in allowed, f'c must be one of {allowed}, got {spec.c}')

def resolution_of_ideal(spec: MorphismSpec) -> ComplexSpec:
    """Eagon-Northcott resolution of I_t for c = 3 written with the
        (-ell) twists: wedge^2 G(-ell), G (x) F(-ell), S_2 F(-ell).
    """
    _require_c(spec, (3,))
    ell = spec.ell
    G, F = spec.G(), spec.F()
    return ComplexSpec(
        (
            exterior_power(2, G).twist(-ell).relabel('P_{-1}'),
            gfm_tensor(G, F).twist(-ell).relabel('P_{-2}'),
            symmetric_power(2, F).twist(-ell).relabel('P_{-3}'),
        ),
        resolved_name='I_t',
        minimality=CLAIMED_MINIMAL,
        codim=3,
    )

def _trace(source: str) -> GradedFreeModule:
    return GradedFreeModule(((0, source, 1),))

def normal_module_terms(spec: MorphismSpec) -> ComplexSpec:
    """Closed form of the resolution of N = Hom(I_t, B_t) for c = 3."""
    _require_c(spec, (3,))
    ell = spec.ell
    G, F, G_dual, F_dual = spec.G(), spec.F(), spec.G_dual(), spec.F_dual()
    GG_dual = gfm_tensor(G, G_dual).relabel('G⊗G*')
    positions = (
        gfm_tensor(G, F_dual).relabel('G⊗F*'),
        gfm_tensor(F, F_dual).relabel('F⊗F*') + GG_dual.remove(_trace('G⊗G*')),
        gfm_tensor(F, G_dual).relabel('F⊗G*')
            + symmetric_power(2, G).twist(-ell).relabel('S_2G(-ℓ)'),
        gfm_tensor(G, F).twist(-ell).relabel('G⊗F(-ℓ)'),
        exterior_power(2, F).twist(-ell).relabel('∧^2F(-ℓ)'),
    )
    return ComplexSpec(
        positions,
        resolved_name='N_(B_t)',
        minimality=CLAIMED_MINIMAL,
        codim=3,
        assumptions=('I_t has the expected codimension 3',),
    )

def normal_module_cone(spec: MorphismSpec) -> ComplexSpec:
    """Uncancelled cone of the columns of the normal-module diagram:
        F = G (x) D_1, P = F (x) D_1 and Q = R followed by the
        resolution of I_t.
    """
    _require_c(spec, (3,))
    D1 = eagon_northcott_family(spec, 1)
    ideal = resolution_of_ideal(spec)
    Q = ComplexSpec(
        (GradedFreeModule.free(1, 0, 'R'),) + ideal.positions,
        resolved_name='R/I_t',
        codim=3,
    )
    return mapping_cone3(
        Q,
        tensor_complex(spec.F(), D1),
        tensor_complex(spec.G(), D1),
        resolved_name='N_(B_t)',
    )

def normal_module_resolution(spec: MorphismSpec) -> ComplexSpec:
    """Resolution of the normal module of B_t = R/I_t for c = 3. The
        cone is cancelled along the trace R, wedge^2 G(-ell), the
        identity block G (x) F(-ell) and S_2 F(-ell); the result must
        agree with the closed form, which is returned.
    """
    _require_c(spec, (3,))
    t, ell = spec.t, spec.ell
    G, F = spec.G(), spec.F()
    cone = normal_module_cone(spec)

    GG = _label_of('G', d_complex_label(spec, 1, 1))
    cone = cone.cancel(1, _trace(GG), _trace('R'))

    GG_ell = _label_of('G', d_complex_label(spec, 1, 2))
    wedge_G = exterior_power(2, G).twist(-ell).relabel('∧^2G(-ℓ)')
    cone = cone.split(2, GG_ell, [
        wedge_G,
        symmetric_power(2, G).twist(-ell).relabel('S_2G(-ℓ)'),
    ])
    cone = cone.cancel(2, wedge_G, cone[3].only('P_{-1}'))

    FG_ell = _label_of('F', d_complex_label(spec, 1, 2))
    cone = cone.cancel(3, cone[3].only(FG_ell), cone[4].only('P_{-2}'))

    FF_ell = _label_of('F', d_complex_label(spec, 1, 3))
    sym_F = symmetric_power(2, F).twist(-ell).relabel('S_2F(-ℓ)')
    cone = cone.split(4, FF_ell, [
        exterior_power(2, F).twist(-ell).relabel('∧^2F(-ℓ)'),
        sym_F,
    ])
    cone = cone.cancel(4, sym_F, cone[5].only('P_{-3}'))

    closed = normal_module_terms(spec)
    tressa(cone.table() == closed.table(),
        f'normal-module cone does not reduce to the closed form for t={t}')
    logger.info('normal module t=%d: ranks %s', t, closed.ranks())
    return closed

def _hom_ideal_resolution(spec: MorphismSpec) -> ComplexSpec:
    """Resolution of Hom(E, I_t) as N plus the P_(-1)* (x) P_(-j) blocks."""
    ideal = resolution_of_ideal(spec)
    P1_dual = gfm_dual_twist(ideal[0])
    extra = [
        gfm_tensor(P1_dual, ideal[0]).relabel('P_{-1}*⊗P_{-1}'),
        gfm_tensor(P1_dual, ideal[1]).relabel('P_{-1}*⊗P_{-2}'),
        gfm_tensor(P1_dual, ideal[2]).relabel('P_{-1}*⊗P_{-3}'),
    ]
    extra[0] = extra[0].remove(_trace('P_{-1}*⊗P_{-1}'))
    hom = normal_module_terms(spec).direct_sum(ComplexSpec(tuple(extra)))
    return hom.with_positions(hom.positions, resolved_name='Hom(E, I_t)')

def _dual_block(ideal: ComplexSpec, k: int) -> ComplexSpec:
    """P_(-k)* (x) P_., labelled P_{-k}*⊗P_{-j}."""
    dual = gfm_dual_twist(ideal[k - 1])
    return ComplexSpec(tuple(
        gfm_tensor(dual, ideal[j - 1]).relabel(f'P_{{-{k}}}*⊗P_{{-{j}}}')
        for j in (1, 2, 3)
    ))

def s2m_tensor_it_resolution(spec: MorphismSpec) -> ComplexSpec:
    """Free resolution of S_2M (x) I_t. For c = 2 it is the cone over
        0 -> M -> F (x) S_2M -> G (x) S_2M; for c = 3 the cone over the
        P_(-k)* (x) P_. blocks and Hom(E, I_t). Both are twisted by
        -ell and may carry redundant summands.
    """
    _require_c(spec, (2, 3))
    if spec.c == 2:
        D1 = eagon_northcott_family(spec, 1)
        D2 = eagon_northcott_family(spec, 2)
        cone = mapping_cone3(
            D1,
            tensor_complex(spec.F(), D2),
            tensor_complex(spec.G(), D2),
        )
    else:
        ideal = resolution_of_ideal(spec)
        cone = mapping_cone3(
            _hom_ideal_resolution(spec),
            _dual_block(ideal, 2),
            _dual_block(ideal, 3),
        )
    twisted = cone.twist(-spec.ell)
    cx = twisted.with_positions(
        twisted.positions,
        resolved_name='S_2M⊗I_t',
        codim=spec.c,
    )
    logger.info('S_2M⊗I_t t=%d c=%d: ranks %s', spec.t, spec.c, cx.ranks())
    return cx

def pieri_split_source(spec: MorphismSpec) -> str:
    """Label of the S_2F* (x) wedge^(t+1) G* (x) F (x) wedge^t F summand
        inside the resolution of S_2M (x) I_t.
    """
    if spec.c == 3:
        return 'P_{-3}*⊗P_{-2}'
    return _label_of('F', d_complex_label(spec, 2, 0))

def s2m_top_source(spec: MorphismSpec) -> str:
    """Label of position 0 of the resolution of S_2M (x) I_t, which is
        S_2F* (x) wedge^t G* (x) wedge^t F up to the twist.
    """
    if spec.c == 3:
        return 'P_{-3}*⊗P_{-1}'
    return _label_of('G', d_complex_label(spec, 2, 0))

def tensor_mm_resolution(spec: MorphismSpec) -> ComplexSpec:
    """Resolution of M (x) M from 0 -> S_2M (x) I_t -> G* (x) M ->
        F* (x) M -> M (x) M -> 0. Position 0 is split into S_2F* and
        wedge^2 F*; the summand F* (x) D_1[2] is labelled H, and the
        S_2F* (x) wedge^(t+1) G* (x) F (x) wedge^t F summand at
        position 3 is split by Pieri into H and its complement.
    """
    _require_c(spec, (2, 3))
    t = spec.t
    vert(t >= 2, f't must be at least 2, got {t}')
    F, F_dual, G_dual = spec.F(), spec.F_dual(), spec.G_dual()
    D1 = eagon_northcott_family(spec, 1)
    cx = mapping_cone3(
        s2m_tensor_it_resolution(spec),
        tensor_complex(G_dual, D1),
        tensor_complex(F_dual, D1),
        resolved_name='M⊗M',
    )

    cx = cx.split(0, _label_of('F*', d_complex_label(spec, 1, 0)), [
        symmetric_power(2, F_dual, 'S_2F*'),
        exterior_power(2, F_dual, '∧^2F*'),
    ])

    h_source = _label_of('F*', d_complex_label(spec, 1, 2))
    cx = cx.split(2, h_source, [cx[2].only(h_source).relabel(H_LABEL)])
    top = s2m_top_source(spec)
    cx = cx.split(2, top, [cx[2].only(top).relabel(S2_TOP_LABEL)])

    top_F = exterior_power(t, F)
    X = gfm_tensor(exterior_power(t + 1, G_dual), top_F)
    I = Partition((0,) + (1,) * (t - 2) + (3,))
    expansion = pieri_wedge(Partition((2,)), t - 1, t)
    tressa(set(expansion.terms) == {I, Partition((1,) * (t - 1) + (2,))},
        f'unexpected Pieri decomposition of S_2 (x) wedge^{t - 1} in rank {t}')
    cx = cx.split(3, pieri_split_source(spec), [
        gfm_tensor(F_dual, X).relabel(H_LABEL),
        gfm_tensor(gfm_tensor(schur_functor(I, F_dual), top_F), X)
            .relabel(f'Σ^({I})F*⊗∧^tF⊗∧^(t+1)G*'),
    ])
    cx = cx.with_positions(cx.positions, codim=spec.c)
    logger.info('M⊗M t=%d c=%d: ranks %s', t, spec.c, cx.ranks())
    return cx

def wedge2_resolution(spec: MorphismSpec) -> ComplexSpec:
    """Resolution of wedge^2 M as the cone of D_2 -> M (x) M, with the
        three cancellations S_2F* (positions 1/0), one F* (x) G*
        (positions 2/1) and wedge^2 G* out of G* (x) G* (positions 3/2).
        H is kept at positions 2 and 3.
    """
    _require_c(spec, (2, 3))
    G_dual = spec.G_dual()
    mm = tensor_mm_resolution(spec)
    D2 = eagon_northcott_family(spec, 2)
    D2 = D2.with_positions(p.relabel(f'S_2M:{p.labels()[0]}') for p in D2.positions)
    cx = mm.direct_sum(D2.shift(1))
    cx = cx.with_positions(cx.positions, resolved_name='∧^2M')

    cx = cx.cancel(0, cx[0].only('S_2F*'), D2[0])

    FG = _label_of('G*', d_complex_label(spec, 1, 0))
    cx = cx.cancel(1, cx[1].only(FG), D2[1])

    GG = _label_of('G*', d_complex_label(spec, 1, 1))
    wedge_G = exterior_power(2, G_dual, '∧^2G*')
    cx = cx.split(2, GG, [wedge_G, symmetric_power(2, G_dual, 'S_2G*')])
    cx = cx.cancel(2, wedge_G, D2[2])

    tressa(cx[2].only(H_LABEL).twists() == cx[3].only(H_LABEL).twists(),
        'H must appear with the same twists at positions 2 and 3')
    logger.info('∧^2M t=%d c=%d: ranks %s', spec.t, spec.c, cx.ranks())
    return cx

def a_module(spec: MorphismSpec, p: int) -> GradedFreeModule:
    """A^p(F) = coker(wedge^(t-p) F -> wedge^(t-p+1) F (x) F*) as a
        graded multiset difference.
    """
    t = spec.t
    F, F_dual = spec.F(), spec.F_dual()
    return gfm_difference(
        gfm_tensor(exterior_power(t - p + 1, F), F_dual),
        exterior_power(t - p, F),
        f'A^{p}(F)',
    )

def be_predicted_terms(spec: MorphismSpec, p: int) -> list[GradedFreeModule]:
    """First three predicted terms of the resolution of
        coker(phi*_(p-1,1)): wedge^p F*, wedge^(p-1) G* (x) F*, and
        L_2^(p-1)(G)* + A^p(F) (x) wedge^t G*. Requires 2 <= p <= t.
    """
    tert(isinstance(spec, MorphismSpec), 'spec must be MorphismSpec')
    spec.require_minimal()
    tert(type(p) is int, 'p must be int')
    vert(2 <= p <= spec.t, f'p must be in [2, {spec.t}], got {p}')
    t = spec.t
    F_dual, G_dual = spec.F_dual(), spec.G_dual()
    hook = schur_functor(hook_partition(2, p - 1), G_dual, f'L_2^{p - 1}(G)*')
    return [
        exterior_power(p, F_dual, f'∧^{p}F*'),
        gfm_tensor(exterior_power(p - 1, G_dual), F_dual).relabel(f'∧^{p - 1}G*⊗F*'),
        hook + gfm_tensor(a_module(spec, p), exterior_power(t, G_dual))
            .relabel(f'A^{p}(F)⊗∧^tG*'),
    ]

def be_predicted_complex(spec: MorphismSpec, p: int) -> ComplexSpec:
    """The predicted terms as a three-position complex for rendering."""
    return ComplexSpec(
        tuple(be_predicted_terms(spec, p)),
        resolved_name=f'coker(φ*_({p - 1},1))',
        minimality=POSSIBLY_NON_MINIMAL,
        codim=spec.c,
        assumptions=('first terms only',),
    )
