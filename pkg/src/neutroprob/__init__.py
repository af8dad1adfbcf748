"""Exact set-valued probability triples over the non-standard rational line.

The pieces fit together like this: tagged rational bounds
(:mod:`~neutroprob.nonstandard`) build normalized interval unions
(:mod:`~neutroprob.nsset`), which form the components of probability
triples and their event algebra (:mod:`~neutroprob.probability`).  A
possible-worlds valuation (:mod:`~neutroprob.worlds`) covers the logic
side, a small expression language (:mod:`~neutroprob.dsl`) drives
evaluation, and brute-force oracles (:mod:`~neutroprob.oracle`) verify
every operation from first principles.
"""

from .nonstandard import (
    BINAD,
    Bound,
    EndpointRole,
    MonadTag,
    as_fraction,
    bound,
    combine_tags,
    resolve_tag,
)
from .nsset import (
    EmptySetError,
    NSSet,
    Piece,
    binad,
    empty,
    interval,
    point,
    points,
)
from .probability import (
    ClassificationReport,
    ComponentFlag,
    Label,
    NPTriple,
    classify,
    impossible_event,
    is_impossible,
    is_sure,
    is_totally_indeterminate,
    n_bounds,
    np_and,
    np_not,
    np_or,
    sure_event,
    totally_indeterminate_event,
)
from .worlds import (
    NOT_APPLICABLE,
    NLKind,
    NLTriple,
    NLValue,
    Status,
    WorldAssignment,
    nl_component,
    nl_nwff,
    nl_triple,
)
from .dsl import (
    EvalError,
    LexError,
    ParseError,
    Style,
    evaluate,
    parse,
    parse_set_literal,
    parse_triple_literal,
    render,
    render_triple,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "BINAD",
    "Bound",
    "ClassificationReport",
    "ComponentFlag",
    "EmptySetError",
    "EndpointRole",
    "EvalError",
    "Label",
    "LexError",
    "MonadTag",
    "NLKind",
    "NLTriple",
    "NLValue",
    "NOT_APPLICABLE",
    "NPTriple",
    "NSSet",
    "ParseError",
    "Piece",
    "Status",
    "Style",
    "WorldAssignment",
    "as_fraction",
    "binad",
    "bound",
    "classify",
    "combine_tags",
    "empty",
    "evaluate",
    "impossible_event",
    "interval",
    "is_impossible",
    "is_sure",
    "is_totally_indeterminate",
    "n_bounds",
    "nl_component",
    "nl_nwff",
    "nl_triple",
    "np_and",
    "np_not",
    "np_or",
    "parse",
    "parse_set_literal",
    "parse_triple_literal",
    "point",
    "points",
    "render",
    "render_triple",
    "resolve_tag",
    "sure_event",
    "tokenize",
    "totally_indeterminate_event",
]
