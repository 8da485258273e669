"""patternlab: pattern-avoiding inversion and ascent sequences.

Enumeration of four combinatorial classes under vincular pattern
avoidance, the counting triangles and weight enumerators attached to them,
a growth bijection realizing the powered Catalan succession rule, the
invcode encoding, and drivers that machine-check every counting claim the
package implements.
"""

from .bijections import check_restriction, invcode, invcode_inverse
from .growth import (
    GrowthCase,
    backward_shift,
    decompose_zero_blocks,
    forward_shift,
    grow,
    params_120,
    rule_children,
    tree_levels,
    ungrow,
)
from .numbers import (
    IntPoly,
    aztec_rhs,
    bell,
    binom,
    c_triangle,
    f_poly,
    f_poly_recursive,
    powered_catalan,
    t_triangle,
    tri_binom,
)
from .patterns import (
    VincularPattern,
    avoids,
    filter_avoiding,
    iter_avoiding,
    occurrences,
    parse_pattern,
)
from .seqcore import (
    ClassId,
    class_size,
    enumerate_class,
    format_sequence,
    iter_class,
    parse_permutation,
    parse_sequence,
    sigma_shift,
)
from .stats import stat, tail_sequence, weight_polynomial
from .verify import CLAIMS, ClaimReport, joint_distribution, verify_all, verify_claim

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "ClaimReport",
    "ClassId",
    "GrowthCase",
    "IntPoly",
    "VincularPattern",
    "avoids",
    "aztec_rhs",
    "backward_shift",
    "bell",
    "binom",
    "c_triangle",
    "check_restriction",
    "class_size",
    "decompose_zero_blocks",
    "enumerate_class",
    "f_poly",
    "f_poly_recursive",
    "filter_avoiding",
    "format_sequence",
    "forward_shift",
    "grow",
    "invcode",
    "invcode_inverse",
    "iter_avoiding",
    "iter_class",
    "joint_distribution",
    "occurrences",
    "params_120",
    "parse_pattern",
    "parse_permutation",
    "parse_sequence",
    "powered_catalan",
    "rule_children",
    "sigma_shift",
    "stat",
    "t_triangle",
    "tail_sequence",
    "tree_levels",
    "tri_binom",
    "ungrow",
    "verify_all",
    "verify_claim",
    "weight_polynomial",
]
