from .nodes import (
    is_existential,
    is_positive,
    is_positive_existential,
    quantifier_depth,
    render_val,
    render_vhf,
)
from .parse import parse_val, parse_vhf
from .translate import translate
from .evaluate import TriBool, eval_val, eval_vhf, verify_vhf_witness
from .corpus import agreement_harness, generate_corpus

__all__ = [
    "parse_vhf", "parse_val", "translate", "eval_vhf", "eval_val",
    "TriBool", "render_vhf", "render_val", "is_positive", "is_existential",
    "is_positive_existential", "quantifier_depth", "generate_corpus",
    "agreement_harness", "verify_vhf_witness",
]
