"""Bound quiver algebras, tensor products, and finiteness certificates."""

from .catalog import (
    catalog_get,
    catalog_ids,
    frame_ids,
    has_quotient,
    is_iso,
    verify_quotient_witness,
    verify_witness,
    witness_frame,
)
from .classify import (
    classify_enveloping,
    classify_self_tensor,
    classify_single,
    classify_tensor,
    classify_triple,
)
from .presentation import (
    Arrow,
    DimensionTable,
    Presentation,
    Profile,
    Quiver,
    Relation,
    dimension_table,
    homology_rank,
    opposite,
    parse_presentation,
    quotient,
    serialize_presentation,
    structural_profile,
    validate_presentation,
)
from .sepgraph import (
    GraphType,
    GraphTypeReport,
    SingleSubquiver,
    UGraph,
    adachi_decide,
    classify_graph,
    cycle_witness,
    separated_quiver,
    underlying_graph,
)
from .strings import band_search, special_biserial_check
from .tensor import (
    enveloping,
    rad_square_quotient,
    tensor_product,
    triangular_matrix,
)
from .verdict import FINITE, INFINITE, OPEN, Certificate, Verdict

__all__ = [
    "Arrow", "Certificate", "DimensionTable", "FINITE", "GraphType",
    "GraphTypeReport", "INFINITE", "OPEN", "Presentation", "Profile",
    "Quiver", "Relation", "SingleSubquiver", "UGraph", "Verdict",
    "adachi_decide", "band_search", "catalog_get", "catalog_ids",
    "classify_enveloping", "classify_graph", "classify_self_tensor",
    "classify_single", "classify_tensor", "classify_triple",
    "cycle_witness", "dimension_table", "enveloping", "frame_ids",
    "has_quotient", "homology_rank", "is_iso", "opposite",
    "parse_presentation", "quotient", "rad_square_quotient",
    "separated_quiver", "serialize_presentation", "special_biserial_check",
    "structural_profile", "tensor_product", "triangular_matrix",
    "underlying_graph", "validate_presentation", "verify_quotient_witness",
    "verify_witness", "witness_frame",
]
