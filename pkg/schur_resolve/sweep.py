"""The invariant suite run by `schur-resolve sweep` over a grid of
    degree data.
"""
from __future__ import annotations
from .assembly import (
    be_predicted_terms,
    normal_module_resolution,
    s2m_tensor_it_resolution,
    tensor_mm_resolution,
    wedge2_resolution,
)
from .errors import UsageError, vert
from .graded import ComplexSpec, MorphismSpec, euler_rank, hilbert_numerator
from .koszulverify import build_d_complex_matrices, random_specialization, verify_acyclicity
from .lascoux import eagon_northcott_family, lascoux_resolution, schur_power_resolution
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable
import logging


logger = logging.getLogger(__name__)

KOSZUL_SEEDS = (1, 2, 3)
KOSZUL_MAX_T = 3


@dataclass(frozen=True)
class SweepJob:
    t: int
    c: int
    degrees: str
    koszul: bool = True

    def spec(self) -> MorphismSpec:
        if self.degrees == 'linear':
            return MorphismSpec.linear(self.t, self.c)
        return MorphismSpec.mixed(self.t, self.c)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''
    checksum: int = 0

    def line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        text = f'{status} {self.name}'
        if self.checksum:
            text += f' crc32={self.checksum:08x}'
        if self.detail:
            text += f' ({self.detail})'
        return text


def sweep_jobs(max_t: int, max_c: int, koszul: bool = True) -> list[SweepJob]:
    vert(max_t >= 1 and max_c >= 1, 'max_t and max_c must be positive')
    return [
        SweepJob(t, c, degrees, koszul)
        for t in range(1, max_t + 1)
        for c in range(1, max_c + 1)
        for degrees in ('linear', 'mixed')
    ]

def _well_formed(name: str, cx: ComplexSpec) -> CheckResult:
    """euler_rank 0 and numerator divisible by (1-T)^codim."""
    euler = euler_rank(cx)
    quotient = hilbert_numerator(cx).divide_by_one_minus_t(cx.codim)
    ok = euler == 0 and quotient is not None
    detail = '' if ok else f'euler={euler} divisible={quotient is not None}'
    return CheckResult(name, ok, detail, cx.checksum())

def _guarded(name: str, check: Callable[[], CheckResult|list[CheckResult]]) -> list[CheckResult]:
    try:
        result = check()
    except (UsageError, ValueError, TypeError) as e:
        logger.warning('%s raised %s: %s', name, type(e).__name__, e)
        return [CheckResult(name, False, f'{type(e).__name__}: {e}')]
    return result if isinstance(result, list) else [result]

def _lascoux_checks(spec: MorphismSpec, tag: str) -> list[CheckResult]:
    results = []
    for i in range(1, spec.t + 1):
        results += _guarded(f'{tag} lascoux i={i}',
            lambda i=i: _well_formed(f'{tag} lascoux i={i}', lascoux_resolution(spec, i)))
    for i in range(-1, spec.c + 1):
        results += _guarded(f'{tag} D_{i}',
            lambda i=i: _well_formed(f'{tag} D_{i}', eagon_northcott_family(spec, i)))

    def lascoux_equals_en() -> CheckResult:
        ok = lascoux_resolution(spec, spec.t).table() == eagon_northcott_family(spec, 0).table()
        return CheckResult(f'{tag} lascoux(t) == D_0', ok)
    results += _guarded(f'{tag} lascoux(t) == D_0', lascoux_equals_en)

    for p in range(1, spec.t + 1):
        results += _guarded(f'{tag} schur power p={p}',
            lambda p=p: _well_formed(f'{tag} schur power p={p}', schur_power_resolution(spec, p)))

    if spec.c == 2:
        def buchsbaum_rim() -> CheckResult:
            ok = schur_power_resolution(spec, 1).table() == eagon_northcott_family(spec, 1).table()
            return CheckResult(f'{tag} schur power p=1 == D_1', ok)
        results += _guarded(f'{tag} schur power p=1 == D_1', buchsbaum_rim)
    return results

def _assembly_checks(spec: MorphismSpec, tag: str) -> list[CheckResult]:
    if spec.c not in (2, 3) or spec.t < 2:
        return []
    results = []
    results += _guarded(f'{tag} S_2M⊗I_t',
        lambda: _well_formed(f'{tag} S_2M⊗I_t', s2m_tensor_it_resolution(spec)))
    results += _guarded(f'{tag} M⊗M',
        lambda: _well_formed(f'{tag} M⊗M', tensor_mm_resolution(spec)))
    results += _guarded(f'{tag} ∧^2M',
        lambda: _well_formed(f'{tag} ∧^2M', wedge2_resolution(spec)))

    def split_sequence() -> CheckResult:
        wedge = hilbert_numerator(wedge2_resolution(spec))
        mm = hilbert_numerator(tensor_mm_resolution(spec))
        sym = hilbert_numerator(eagon_northcott_family(spec, 2))
        return CheckResult(f'{tag} num(∧^2M) == num(M⊗M) - num(S_2M)', wedge == mm - sym)
    results += _guarded(f'{tag} split sequence', split_sequence)

    def predicted_head() -> CheckResult:
        head = wedge2_resolution(spec).without('H').table()[:3]
        predicted = [m.twists() for m in be_predicted_terms(spec, 2)]
        return CheckResult(f'{tag} predicted terms p=2 == ∧^2M head', head == predicted)
    results += _guarded(f'{tag} predicted head', predicted_head)

    if spec.c == 2:
        def schur_power_match() -> CheckResult:
            ok = hilbert_numerator(wedge2_resolution(spec)) \
                == hilbert_numerator(schur_power_resolution(spec, 2))
            return CheckResult(f'{tag} num(∧^2M) == num(Σ^(1,1)M)', ok)
        results += _guarded(f'{tag} wedge2 vs schur power', schur_power_match)
    else:
        results += _guarded(f'{tag} normal module',
            lambda: _well_formed(f'{tag} normal module', normal_module_resolution(spec)))
    return results

def _koszul_checks(spec: MorphismSpec, tag: str) -> list[CheckResult]:
    results = []
    for i in range(-1, spec.c + 1):
        for seed in KOSZUL_SEEDS:
            name = f'{tag} koszul D_{i} seed={seed}'

            def check(i=i, seed=seed, name=name) -> CheckResult:
                sm = random_specialization(spec, seed)
                chain = build_d_complex_matrices(spec, i, sm)
                report = verify_acyclicity(chain)
                dims = eagon_northcott_family(spec, i).ranks()
                ok = report.passed and list(chain.dims) == dims + [0] * (len(chain.dims) - len(dims))
                return CheckResult(name, ok, '' if ok else report.to_json().strip())
            results += _guarded(name, check)
    return results

def run_job(job: SweepJob) -> list[CheckResult]:
    """Run every check for one degree-data point."""
    spec = job.spec()
    tag = f'[{job.degrees} t={job.t} c={job.c}]'
    logger.info('sweep %s', tag)
    results = _lascoux_checks(spec, tag) + _assembly_checks(spec, tag)
    if job.koszul and spec.t <= KOSZUL_MAX_T:
        results += _koszul_checks(spec, tag)
    return results

def run_sweep(max_t: int = 4, max_c: int = 3, workers: int = 1,
              koszul: bool = True) -> list[CheckResult]:
    """Run all jobs, in a process pool when workers > 1. Results come
        back in parameter order either way.
    """
    vert(workers >= 1, 'workers must be positive')
    jobs = sweep_jobs(max_t, max_c, koszul)
    if workers == 1:
        batches = [run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(run_job, jobs))
    return [result for batch in batches for result in batch]
