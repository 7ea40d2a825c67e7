"""Free-product factorizations of free groups from cutvertices of Whitehead graphs.

Given a free group with a basis and a finite set of elements and conjugacy
classes, find a longest free-product decomposition in which every member of
the set lies in (or meets) one factor.

>>> from whitehead import parse_input, factorize
>>> rank, rels = parse_input("[abab]")
>>> factorize(rels, rank).factor_count
2
"""

from .algorithm import (
    class_subbasis_test,
    cutvertex_algorithm,
    factorize,
    is_cutvertex_free,
    make_strategy,
    minimizing_algorithm,
    rewrite_over_final,
    subbasis_test,
)
from .errors import (
    BasisMismatchError,
    InvariantError,
    ParseError,
    PreconditionError,
    TrivialRelatorError,
    WhiteheadError,
)
from .factorization import FactorizationReport, Partition, allot, finest_partition, is_atom
from .grammar import format_relator, format_word, parse_input, parse_relators, parse_word
from .graph import WhiteheadGraph, build_graph, cutvertices, legal_cutvertices
from .transforms import WhiteheadTransform, apply_transform, enumerate_transforms
from .words import BasisState, ConjClass, CyclicWord, Element, Relator, reduce

__version__ = "0.1.0"
