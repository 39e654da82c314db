from schur_resolve.classes import (
    AcyclicityReport,
    CheckResult,
    ComplexSpec,
    GradedFreeModule,
    LascouxTerm,
    LaurentPolynomial,
    MorphismSpec,
    Partition,
    PieriExpansion,
    RationalMatrixChain,
    SpecializedMatrix,
    SurgeryResult,
    SweepJob,
)
from schur_resolve.interfaces import (
    ComplexProtocol,
    GradedModuleProtocol,
    MatrixChainProtocol,
)
from schur_resolve.partitions import (
    adjacency,
    conjugate,
    durfee,
    lascoux_surgery,
    lpq_rank,
    schur_rank,
)
from schur_resolve.schur import (
    pieri_sym,
    pieri_wedge,
    schur_eval,
    schur_functor,
    schur_generator_degrees,
    sym_wedge2_plethysm,
)
from schur_resolve.graded import (
    complex_dual_twist,
    euler_rank,
    hilbert_numerator,
    render,
)
from schur_resolve.lascoux import (
    canonical_module_resolution,
    eagon_northcott_family,
    lascoux_resolution,
    schur_power_resolution,
)
from schur_resolve.koszulverify import (
    build_d_complex_matrices,
    random_specialization,
    verify_acyclicity,
)
from schur_resolve.assembly import (
    be_predicted_terms,
    mapping_cone3,
    normal_module_resolution,
    s2m_tensor_it_resolution,
    tensor_mm_resolution,
    wedge2_resolution,
)
from schur_resolve.errors import UsageError
