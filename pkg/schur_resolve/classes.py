from .graded import ComplexSpec, GradedFreeModule, LaurentPolynomial, MorphismSpec
from .koszulverify import AcyclicityReport, RationalMatrixChain, SpecializedMatrix
from .lascoux import LascouxTerm
from .partitions import Partition, SurgeryResult
from .schur import PieriExpansion
from .sweep import CheckResult, SweepJob
