"""Block designs encoding SL-invariants: chromatic filters and exact
evaluation at sums of powers of linear forms."""

from blockinv._core import (
    BlockDesign,
    CollinearityGraph,
    GuardExceeded,
    ParseError,
    ValidationError,
    ValidationReport,
    ah_codimension,
    canonical_key,
    chromatic_number,
    collinearity,
    count_colorings,
    count_total_monomials,
    count_weight_arrays,
    covering_bound,
    design,
    design_aut_order,
    det,
    evaluate,
    evaluate_at_paper8,
    generate,
    graph_aut_order,
    has_clique,
    is_ah_ordinary,
    is_q_colorable,
    is_vertex_critical,
    paper8_forms,
    parallel_evaluate,
    parse_block_list,
    parse_symbolic,
    pipeline_filter,
    preset,
    reorder_sign,
    validate,
)

__all__ = [
    "BlockDesign",
    "CollinearityGraph",
    "GuardExceeded",
    "ParseError",
    "ValidationError",
    "ValidationReport",
    "ah_codimension",
    "canonical_key",
    "chromatic_number",
    "collinearity",
    "count_colorings",
    "count_total_monomials",
    "count_weight_arrays",
    "covering_bound",
    "design",
    "design_aut_order",
    "det",
    "evaluate",
    "evaluate_at_paper8",
    "generate",
    "graph_aut_order",
    "has_clique",
    "is_ah_ordinary",
    "is_q_colorable",
    "is_vertex_critical",
    "paper8_forms",
    "parallel_evaluate",
    "parse_block_list",
    "parse_symbolic",
    "pipeline_filter",
    "preset",
    "reorder_sign",
    "validate",
]
