"""Type-C plactic monoid: insertion, rewriting, crystals, and tree codecs.

The alphabet C_n is 1 < 2 < ... < n < n̄ < ... < 1̄ with barred letters stored
as negative ints (ī = -i).  Columns are strictly increasing tuples of letters,
decorated words are tuples of admissible columns, and ε is the empty tuple.
"""

from .words import (
    Column,
    DomainError,
    Letter,
    ParseError,
    Word,
    format_word,
    is_admissible,
    parse_plain,
    parse_word,
    precedes,
)
from .crystal import apply, highest_weight, weight
from .insertion import insert_pair, normal_form, normal_form_word, product
from .rewriting import conf, run_strategy, verify_coherence
from .ctree import CTree, encode, enumerate_valid_trees, reading, tree_normal_form

__version__ = "0.1.0"

__all__ = [
    "CTree",
    "Column",
    "DomainError",
    "Letter",
    "ParseError",
    "Word",
    "apply",
    "conf",
    "encode",
    "enumerate_valid_trees",
    "format_word",
    "highest_weight",
    "insert_pair",
    "is_admissible",
    "normal_form",
    "normal_form_word",
    "parse_plain",
    "parse_word",
    "precedes",
    "product",
    "reading",
    "run_strategy",
    "tree_normal_form",
    "verify_coherence",
    "weight",
]
