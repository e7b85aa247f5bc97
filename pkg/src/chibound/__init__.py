"""Recognition, decomposition and coloring of (bull, diamond)-free graphs."""
from .coloring import (TriangleFreeColorer, color_bull_diamond, color_dispatch, color_p5, color_p6,
                       color_p7, color_prism_case, color_triangle_free, extend_into_clique_component)
from .decomposition import CliqueLayering, clique_layering, verify_lemma31
from .errors import BudgetExceeded, ClassViolation, DeskLimitExceeded, GraphError, StructureError
from .gen import SamplerSpec, planted_instance, sample
from .graph import Graph, build_graph, named_graph
from .io import read_graph, write_graph
from .oracle import BoundCertificate, Coloring, chromatic_number_exact, max_clique, verify_coloring
from .recognition import ClassReport, classify, is_perfect
from .bounds import BoundReport, eval_bounds, table_bound

__version__ = "0.1.0"

__all__ = [
    "TriangleFreeColorer", "color_bull_diamond", "color_dispatch", "color_p5", "color_p6", "color_p7",
    "color_prism_case", "color_triangle_free", "extend_into_clique_component",
    "CliqueLayering", "clique_layering", "verify_lemma31",
    "BudgetExceeded", "ClassViolation", "DeskLimitExceeded", "GraphError", "StructureError",
    "SamplerSpec", "planted_instance", "sample", "Graph", "build_graph", "named_graph",
    "read_graph", "write_graph", "BoundCertificate", "Coloring", "chromatic_number_exact", "max_clique",
    "verify_coloring", "ClassReport", "classify", "is_perfect", "BoundReport", "eval_bounds", "table_bound",
]
