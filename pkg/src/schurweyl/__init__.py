"""Exact computations with Young diagrams, Young symmetrizers and Schur functors."""

from .classification import (
    GroupKind,
    IrrepLabel,
    enumerate_labels,
    label_dimension,
    make_label,
    normalize_gl_label,
    tensor_with_determinant,
    validate_label,
)
from .diagrams import (
    YoungDiagram,
    conjugate,
    enumerate_bounded,
    enumerate_partitions,
    make_diagram,
    render_ascii,
)
from .group_algebra import (
    AlgebraElement,
    column_antisymmetrizer,
    left_ideal_dimension,
    multiply,
    quasi_idempotent_constant,
    row_symmetrizer,
    young_symmetrizer,
)
from .permutations import (
    Permutation,
    compose,
    conjugate_perm,
    cycle_decomposition,
    cycle_type,
    enumerate_group,
    sign,
)
from .schur import (
    SubspaceBasis,
    TensorOperator,
    algebra_operator,
    apply_schur_functor,
    commutant_dimension,
    monoid_operator,
    permutation_operator,
    permutation_span_dimension,
    schur_dimension,
    schur_subspace_basis,
    schur_weyl_check,
)
from .tableaux import (
    Tableau,
    canonical_tableau,
    count_standard,
    enumerate_standard,
    hook_length_count,
    is_standard,
)

__version__ = "0.1.0"
