"""Minimal right determiners of irreducible morphisms over algebras of type A_n."""

from .arquiver import (
    AlmostSplitSeq,
    ARQuiver,
    IrreducibleMorphism,
    almost_split_sequences,
    ar_quiver,
    export_dot,
    irreducible_pairs,
    string_ass,
    tau,
    tau_inv,
)
from .determiner import (
    DeterminerRecord,
    DetReport,
    almost_factors_through,
    det_set,
    is_right_determined_by,
    minimal_right_determiner,
    oracle_minimal_determiner,
    predicted_count,
)
from .homalg import HomArrow, basis_hom, cokernel, compose, factors_through, hom_dim, image, kernel
from .intervals import (
    IntervalModule,
    enumerate_indecomposables,
    injective,
    projective,
    radical_of_projective,
    simple,
    socle,
    top,
)
from .quiver import (
    QuiverError,
    QuiverSpec,
    Relation,
    parse_quiver,
    render_quiver,
    sink_ideals,
    sources_sinks,
)

__version__ = "0.1.0"
