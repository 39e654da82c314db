from __future__ import annotations
import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import schur_resolve
from schur_resolve import (
    assembly,
    classes,
    cli,
    errors,
    graded,
    interfaces,
    koszulverify,
    lascoux,
    linalg,
    partitions,
    schur,
    sweep,
)
from schur_resolve.graded import GradedFreeModule, MorphismSpec
from schur_resolve.partitions import Partition


# Betti table of R/I_2 for a generic 3x5 matrix of linear forms.
EXAMPLE_RI = [
    {0: 1},
    {-2: 30},
    {-3: 120},
    {-4: 210},
    {-5: 168, -6: 50},
    {-6: 50, -7: 120},
    {-8: 105},
    {-9: 40},
    {-10: 6},
]

# Its Schur power Sigma^(2,2) M = S_2(wedge^2 M).
EXAMPLE_SCHUR_POWER = [
    {0: 6},
    {-1: 40},
    {-2: 105},
    {-3: 120, -4: 50},
    {-4: 50, -5: 168},
    {-6: 210},
    {-7: 120},
    {-8: 30},
    {-10: 1},
]

# wedge^2 M for the same matrix.
EXAMPLE_WEDGE2 = [
    {0: 3},
    {-1: 15},
    {-2: 15, -3: 60},
    {-4: 210},
    {-5: 294},
    {-6: 210},
    {-7: 60, -8: 15},
    {-9: 15},
    {-10: 3},
]

# Normal module of the ideal of maximal minors, t = 3, c = 3.
EXAMPLE_NORMAL = [
    {1: 15},
    {0: 33},
    {-1: 15, -3: 15},
    {-4: 15},
    {-5: 3},
]


def linear33() -> MorphismSpec:
    return MorphismSpec.linear(3, 3)
