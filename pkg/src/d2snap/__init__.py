"""DOM downsampling: shrink HTML into snapshots an LLM can afford to read.

Typical use::

    from d2snap import parse_html, d2snap, serialize

    root = parse_html(open("page.html", "rb").read())
    snapshot = d2snap(root, k=0.3, l=0.3, m=0.3)
    print(serialize(snapshot))

or, budget-driven::

    from d2snap import downsample_to_budget

    result = downsample_to_budget(root, max_tokens=8192)
    print(serialize(result.snapshot))
"""

from .adaptive import (
    AdaptiveResult,
    TokenEstimator,
    downsample_to_budget,
    estimate_tokens,
    halton,
)
from .core import UID_ATTRIBUTE, annotate_uids, d2snap, merge_unit
from .dom import (
    DOCUMENT_NAME,
    DomNode,
    NodeKind,
    VOID_ELEMENTS,
    coalesce_text,
    deep_clone,
    element,
    element_depth,
    height,
    normalize_whitespace,
    parse_html,
    serialize,
    serialize_pretty,
    structurally_equal,
    text,
)
from .errors import (
    BudgetError,
    ContractViolation,
    D2SnapError,
    ParseError,
    StructureError,
)
from .ground_truth import (
    ARIA_PREFIX,
    ARIA_SCORE,
    ATTRIBUTE_SCORES,
    ELEMENT_RATINGS,
    ElementClass,
    NOISE_ELEMENTS,
    attribute_score,
    classify_element,
    element_class,
    element_score,
    ground_truth_dump,
    score_attribute,
)
from .textrank import (
    prune_text,
    rank_scores,
    ranked_indices,
    sentence_similarity,
    similarity_matrix,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "AdaptiveResult",
    "TokenEstimator",
    "downsample_to_budget",
    "estimate_tokens",
    "halton",
    "UID_ATTRIBUTE",
    "annotate_uids",
    "d2snap",
    "merge_unit",
    "DOCUMENT_NAME",
    "DomNode",
    "NodeKind",
    "VOID_ELEMENTS",
    "coalesce_text",
    "deep_clone",
    "element",
    "element_depth",
    "height",
    "normalize_whitespace",
    "parse_html",
    "serialize",
    "serialize_pretty",
    "structurally_equal",
    "text",
    "BudgetError",
    "ContractViolation",
    "D2SnapError",
    "ParseError",
    "StructureError",
    "ARIA_PREFIX",
    "ARIA_SCORE",
    "ATTRIBUTE_SCORES",
    "ELEMENT_RATINGS",
    "ElementClass",
    "NOISE_ELEMENTS",
    "attribute_score",
    "classify_element",
    "score_attribute",
    "element_class",
    "element_score",
    "ground_truth_dump",
    "prune_text",
    "rank_scores",
    "ranked_indices",
    "sentence_similarity",
    "similarity_matrix",
    "split_sentences",
    "tokenize",
    "__version__",
]
